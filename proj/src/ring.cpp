#include "nilgraph/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nilgraph {

std::string canonical_spec_text(const std::vector<std::int64_t>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    out += std::to_string(factors[i]);
  }
  return out;
}

RingSpec parse_ring_spec(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty ring spec");

  std::vector<std::int64_t> factors;
  const char* p = compact.data();
  const char* end = p + compact.size();
  while (true) {
    if (p == end || (*p != 'Z' && *p != 'z')) {
      throw ParseError("expected 'Z' in ring spec '" + compact + "'");
    }
    ++p;
    std::int64_t modulus = 0;
    auto [next, ec] = std::from_chars(p, end, modulus);
    if (ec == std::errc::result_out_of_range) {
      throw DomainError("modulus out of range in ring spec '" + compact + "'");
    }
    if (ec != std::errc() || next == p) {
      throw ParseError("expected modulus after 'Z' in ring spec '" + compact + "'");
    }
    if (modulus < 2) {
      throw DomainError("modulus must be at least 2, got " + std::to_string(modulus));
    }
    factors.push_back(modulus);
    p = next;
    if (p == end) break;
    if (*p != 'x' && *p != 'X') {
      throw ParseError("expected 'x' separator in ring spec '" + compact + "'");
    }
    ++p;
  }
  return RingSpec{factors, canonical_spec_text(factors)};
}

FiniteRing::FiniteRing(RingSpec spec, std::int64_t max_order) : spec_(std::move(spec)) {
  if (spec_.factors.empty()) throw DomainError("ring spec has no factors");
  order_ = 1;
  for (std::int64_t f : spec_.factors) {
    if (f < 2) throw DomainError("modulus must be at least 2");
    if (order_ > max_order / f) {
      throw DomainError("ring order exceeds configured cap " + std::to_string(max_order));
    }
    order_ *= f;
  }
  std::vector<std::int64_t> ones(spec_.factors.size(), 1);
  one_ = encode(ones);
  squarings_ = 0;
  for (std::int64_t reach = 1; reach < order_; reach *= 2) ++squarings_;
  if (squarings_ == 0) squarings_ = 1;
}

std::int64_t FiniteRing::add(std::int64_t a, std::int64_t b) const {
  if (single_factor()) return (a + b) % order_;
  std::int64_t out = 0, stride = 1;
  for (std::int64_t f : spec_.factors) {
    out += ((a % f + b % f) % f) * stride;
    a /= f;
    b /= f;
    stride *= f;
  }
  return out;
}

std::int64_t FiniteRing::neg(std::int64_t a) const {
  if (single_factor()) return (order_ - a) % order_;
  std::int64_t out = 0, stride = 1;
  for (std::int64_t f : spec_.factors) {
    out += ((f - a % f) % f) * stride;
    a /= f;
    stride *= f;
  }
  return out;
}

std::int64_t FiniteRing::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t FiniteRing::mul(std::int64_t a, std::int64_t b) const {
  if (single_factor()) return (a * b) % order_;
  std::int64_t out = 0, stride = 1;
  for (std::int64_t f : spec_.factors) {
    out += ((a % f) * (b % f) % f) * stride;
    a /= f;
    b /= f;
    stride *= f;
  }
  return out;
}

std::int64_t FiniteRing::times_one(std::int64_t m) const {
  std::int64_t out = 0, stride = 1;
  for (std::int64_t f : spec_.factors) {
    out += ((m % f + f) % f) * stride;
    stride *= f;
  }
  return out;
}

std::vector<std::int64_t> FiniteRing::decode(std::int64_t x) const {
  std::vector<std::int64_t> digits;
  digits.reserve(spec_.factors.size());
  for (std::int64_t f : spec_.factors) {
    digits.push_back(x % f);
    x /= f;
  }
  return digits;
}

std::int64_t FiniteRing::encode(const std::vector<std::int64_t>& digits) const {
  std::int64_t out = 0, stride = 1;
  for (std::size_t i = 0; i < spec_.factors.size(); ++i) {
    out += (digits[i] % spec_.factors[i]) * stride;
    stride *= spec_.factors[i];
  }
  return out;
}

std::string FiniteRing::element_label(std::int64_t x) const {
  if (single_factor()) return std::to_string(x);
  std::string out = "(";
  auto digits = decode(x);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  out += ')';
  return out;
}

bool FiniteRing::is_nilpotent(std::int64_t x) const {
  std::int64_t y = x;
  for (int i = 0; i < squarings_; ++i) y = mul(y, y);
  return y == 0;
}

NilData nil_set(const FiniteRing& ring) {
  NilData data;
  data.membership.assign(static_cast<std::size_t>(ring.order()), 0);
  for (std::int64_t x = 0; x < ring.order(); ++x) {
    if (ring.is_nilpotent(x)) {
      data.nilpotent_ids.push_back(x);
      data.membership[static_cast<std::size_t>(x)] = 1;
    }
  }
  data.t = static_cast<std::int64_t>(data.nilpotent_ids.size());
  return data;
}

std::int64_t even_order_witness(const FiniteRing& ring) {
  if (ring.odd_order()) {
    throw DomainError("even_order_witness requires a ring of even order");
  }
  const std::int64_t m = odd_part(ring.order());
  const std::int64_t x = ring.times_one(m);
  if (ring.is_nilpotent(x)) {
    throw FalsificationError("witness " + ring.element_label(x) + " of " +
                             ring.spec().canonical_text + " is nilpotent");
  }
  if (!ring.is_nilpotent(ring.add(x, x))) {
    throw FalsificationError("2*" + ring.element_label(x) + " of " +
                             ring.spec().canonical_text + " is not nilpotent");
  }
  return x;
}

HalvingCheck odd_halving_check(const FiniteRing& ring, const NilData& nil) {
  HalvingCheck out;
  out.holds = true;
  for (std::int64_t x = 0; x < ring.order(); ++x) {
    if (!nil.contains(x) && nil.contains(ring.add(x, x))) {
      out.holds = false;
      out.counterexample = x;
      break;
    }
  }
  return out;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t p : distinct_prime_factors(n)) r *= p;
  return r;
}

std::int64_t odd_part(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace nilgraph
