#include "hahnfield/scalar.hpp"

#include <utility>

#include "hahnfield/error.hpp"

namespace hahn {

const char* to_string(FieldClass field) {
  switch (field) {
    case FieldClass::Rat:
      return "Rat";
    case FieldClass::Root2:
      return "Root2";
  }
  return "?";
}

Scalar::Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: a + b sqrt2 has the sign of a exactly when a^2 > 2 b^2.
  const mpq_class n = a_ * a_ - 2 * b_ * b_;
  return sa * sgn(n);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_rational() && other.is_rational()) {
    a_ *= other.a_;
    return *this;
  }
  mpq_class a = a_ * other.a_ + 2 * b_ * other.b_;
  mpq_class b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= inverse(other); }

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar inverse(const Scalar& x) {
  if (x.is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of 0");
  if (x.is_rational()) return Scalar(1 / x.rational_part());
  const mpq_class n = norm(x);
  return Scalar(x.rational_part() / n, -x.root2_part() / n);
}

Scalar conjugate(const Scalar& x) { return Scalar(x.rational_part(), -x.root2_part()); }

mpq_class norm(const Scalar& x) {
  return x.rational_part() * x.rational_part() - 2 * x.root2_part() * x.root2_part();
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar power(const Scalar& x, unsigned long exponent) {
  Scalar result(1);
  Scalar base = x;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

namespace {

mpz_class floor_rational(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

}  // namespace

mpz_class floor(const Scalar& x) {
  if (x.is_rational()) return floor_rational(x.rational_part());

  const mpq_class& a = x.rational_part();
  const mpq_class& b = x.root2_part();
  // Convergents of sqrt 2 satisfy p' = p + 2q, q' = p + q and alternate below/above.
  mpz_class p = 1;
  mpz_class q = 1;
  for (;;) {
    mpz_class p_next = p + 2 * q;
    mpz_class q_next = p + q;
    mpq_class below(p, q);
    mpq_class above(p_next, q_next);
    below.canonicalize();
    above.canonicalize();
    if (below > above) std::swap(below, above);
    mpq_class lo = a + b * below;
    mpq_class hi = a + b * above;
    if (lo > hi) std::swap(lo, hi);
    const mpz_class f_lo = floor_rational(lo);
    if (f_lo == floor_rational(hi)) return f_lo;
    p = std::move(p_next);
    q = std::move(q_next);
  }
}

namespace {

mpz_class integer_root(const mpz_class& value, unsigned long n) {
  mpz_class root;
  mpz_root(root.get_mpz_t(), value.get_mpz_t(), n);
  return root;
}

std::optional<mpq_class> rational_root(const mpq_class& x, unsigned long n) {
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), x.get_num_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), x.get_den_mpz_t(), n) == 0) return std::nullopt;
  mpq_class root(num, den);
  root.canonicalize();
  return root;
}

mpz_class round_half_up(const Scalar& x) { return floor(x + Scalar(mpq_class(1, 2))); }

// floor(|x| * 2^bits) as an integer.
mpz_class scaled_floor(const Scalar& x, unsigned long bits) {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  const Scalar scaled = abs(x) * Scalar(mpq_class(scale));
  return floor(scaled);
}

}  // namespace

std::optional<Scalar> nth_root(const Scalar& x, unsigned long n, FieldClass field) {
  if (n == 0) throw MathError(ErrorKind::InvalidArgument, "root index must be positive");
  if (!x.belongs_to(field)) {
    throw MathError(ErrorKind::CoefficientOutsideField, to_string(x) + " is not in " + to_string(field));
  }
  if (x.sign() <= 0) throw MathError(ErrorKind::NonPositiveRadicand, to_string(x));
  if (n == 1) return x;

  if (x.is_rational()) {
    if (auto root = rational_root(x.rational_part(), n)) return Scalar(*root);
    if (field == FieldClass::Rat) return std::nullopt;
  }

  // Any root y lies in (1/D) Z[sqrt 2] where D clears the denominators of x, since
  // (D y)^n = D^(n-1) (D x) is integral and Z[sqrt 2] is integrally closed. Recover
  // y = (C + E sqrt 2) / D from fixed-point approximations of y and its conjugate,
  // then confirm every candidate exactly.
  const mpq_class& a = x.rational_part();
  const mpq_class& b = x.root2_part();
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const unsigned long bits = mpz_sizeinbase(d.get_mpz_t(), 2) + 4;

  const Scalar conj = conjugate(x);
  if (conj.sign() < 0 && n % 2 == 0) return std::nullopt;

  const mpz_class y_fixed = integer_root(scaled_floor(x, bits * n), n);
  const mpz_class y_conj_abs = integer_root(scaled_floor(conj, bits * n), n);

  mpz_class denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits + 1);

  for (const int conj_sign : {1, -1}) {
    if (n % 2 == 1 && conj_sign != conj.sign()) continue;
    const mpz_class y_conj = conj_sign * y_conj_abs;
    // C ~ D (y + y') / 2,  E ~ D (y - y') / (2 sqrt 2) = D (y - y') sqrt 2 / 4.
    const mpz_class c_mid = round_half_up(Scalar(mpq_class(mpz_class(d * (y_fixed + y_conj)), denom)));
    const mpz_class e_mid =
        round_half_up(Scalar(0, mpq_class(mpz_class(d * (y_fixed - y_conj)), mpz_class(2 * denom))));
    for (int dc = -1; dc <= 1; ++dc) {
      for (int de = -1; de <= 1; ++de) {
        const Scalar candidate(mpq_class(mpz_class(c_mid + dc), d), mpq_class(mpz_class(e_mid + de), d));
        if (candidate.sign() > 0 && power(candidate, n) == x) return candidate;
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  if (sgn(x.rational_part()) == 0) return to_string(x.root2_part()) + "*r2";
  std::string out = to_string(x.rational_part());
  if (sgn(x.root2_part()) < 0) {
    out += "-" + to_string(mpq_class(-x.root2_part()));
  } else {
    out += "+" + to_string(x.root2_part());
  }
  return out + "*r2";
}

}  // namespace hahn
