#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilgraph {

// Malformed ring spec text (bad token, missing modulus, trailing garbage).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input naming an unsupported ring (modulus < 2, order
// above the configured cap).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact search was asked to run on a component larger than its cap.
// Callers may catch this, raise the cap and retry, or record a skip.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verified construction violated a property it is guaranteed to satisfy.
// Reaching this means either a bug or a counterexample to a proof; it must
// never be swallowed.
struct FalsificationError : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr std::int64_t kDefaultMaxOrder = 1'000'000;

struct RingSpec {
  std::vector<std::int64_t> factors;  // moduli in written order, each >= 2
  std::string canonical_text;         // normalized, e.g. "Z4xZ9"
};

std::string canonical_spec_text(const std::vector<std::int64_t>& factors);

// Grammar: Z<int> ( x Z<int> )*  -- case-insensitive, whitespace ignored.
RingSpec parse_ring_spec(std::string_view text);

// Z_{f0} x Z_{f1} x ... with elements addressed by a single mixed-radix
// index in [0, order). The first factor is the least significant digit, so
// for a single factor the index of an element is its residue.
class FiniteRing {
 public:
  explicit FiniteRing(RingSpec spec, std::int64_t max_order = kDefaultMaxOrder);

  const RingSpec& spec() const { return spec_; }
  std::int64_t order() const { return order_; }
  std::int64_t factor_count() const { return static_cast<std::int64_t>(spec_.factors.size()); }
  bool single_factor() const { return spec_.factors.size() == 1; }
  bool odd_order() const { return order_ % 2 != 0; }

  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return one_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  // m.1 = 1 + 1 + ... (m times), for any integer m
  std::int64_t times_one(std::int64_t m) const;

  std::vector<std::int64_t> decode(std::int64_t x) const;
  std::int64_t encode(const std::vector<std::int64_t>& digits) const;

  // "7" for Z_n, "(1,0)" for products
  std::string element_label(std::int64_t x) const;

  // x^k = 0 for some k >= 1, decided by repeated squaring: the nilpotency
  // index is at most |R|, so ceil(log2 |R|) squarings reach exponent >= it.
  bool is_nilpotent(std::int64_t x) const;

 private:
  RingSpec spec_;
  std::int64_t order_ = 0;
  std::int64_t one_ = 0;
  int squarings_ = 0;
};

inline FiniteRing build_ring(RingSpec spec, std::int64_t max_order = kDefaultMaxOrder) {
  return FiniteRing(std::move(spec), max_order);
}

struct NilData {
  std::vector<std::int64_t> nilpotent_ids;  // sorted
  std::int64_t t = 0;                       // |Nil(R)|
  std::vector<std::uint8_t> membership;     // indexed by element id

  bool contains(std::int64_t x) const { return membership[static_cast<std::size_t>(x)] != 0; }
};

NilData nil_set(const FiniteRing& ring);

// For even |R| = 2^k * m (m odd) the element x = m.1 satisfies x not in
// Nil(R) and 2x in Nil(R). Both properties are re-checked on the returned
// element; a violation would contradict the construction and throws.
std::int64_t even_order_witness(const FiniteRing& ring);

struct HalvingCheck {
  bool holds = false;                         // 2x in Nil implies x in Nil, for every x
  std::optional<std::int64_t> counterexample; // some x not in Nil with 2x in Nil
};

// Scans the whole ring. Odd-order rings must return holds == true.
HalvingCheck odd_halving_check(const FiniteRing& ring, const NilData& nil);

// Number theory helpers used across the library.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);
std::int64_t radical(std::int64_t n);  // product of distinct primes of n
std::int64_t odd_part(std::int64_t n);
bool is_power_of_two(std::int64_t n);

}  // namespace nilgraph
