#include "rlw/scalar.hpp"

#include <cctype>

#include "rlw/errors.hpp"

namespace rlw {

namespace {

Scalar sum_of(const Semiring& d, const std::vector<Scalar>& xs, std::size_t from = 0) {
  Scalar s = d.zero();
  for (std::size_t i = from; i < xs.size(); ++i) s = d.add(s, xs[i]);
  return s;
}

// a - b where the caller knows the difference is legal in d.
Scalar minus(const Semiring& d, const Scalar& a, const Scalar& b) {
  if (d.kind() == SemiringKind::Bool) return Scalar((a.is_zero() || !b.is_zero()) ? 0L : 1L);
  return Scalar(mpq_class(a.value() - b.value()));
}

}  // namespace

Semiring Semiring::by_name(std::string_view name) {
  if (name == "nat") return Semiring(SemiringKind::Nat);
  if (name == "int") return Semiring(SemiringKind::Int);
  if (name == "rat") return Semiring(SemiringKind::Rat);
  if (name == "qpos") return Semiring(SemiringKind::RatNonneg);
  if (name == "bool") return Semiring(SemiringKind::Bool);
  throw UsageError("unknown semiring '" + std::string(name) + "'");
}

std::vector<Semiring> Semiring::all() {
  return {Semiring(SemiringKind::Nat), Semiring(SemiringKind::Int), Semiring(SemiringKind::Rat),
          Semiring(SemiringKind::RatNonneg), Semiring(SemiringKind::Bool)};
}

std::string_view Semiring::name() const {
  switch (kind_) {
    case SemiringKind::Nat: return "nat";
    case SemiringKind::Int: return "int";
    case SemiringKind::Rat: return "rat";
    case SemiringKind::RatNonneg: return "qpos";
    case SemiringKind::Bool: return "bool";
  }
  return "?";
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == SemiringKind::Bool) return Scalar((a.is_zero() && b.is_zero()) ? 0L : 1L);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Scalar(mpq_class(a.value() + b.value()));
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == SemiringKind::Bool) return Scalar((a.is_zero() || b.is_zero()) ? 0L : 1L);
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.value() == 1) return b;
  if (b.value() == 1) return a;
  return Scalar(mpq_class(a.value() * b.value()));
}

Scalar Semiring::neg(const Scalar& a) const {
  if (!is_ring()) throw Error("NotRing", "no additive inverses in " + std::string(name()));
  return Scalar(mpq_class(-a.value()));
}

Scalar Semiring::embed(const mpz_class& n) const {
  if (kind_ == SemiringKind::Bool) return Scalar(n == 0 ? 0L : 1L);
  return Scalar(mpq_class(n));
}

Scalar Semiring::inv_nat(const mpz_class& n) const {
  if (!has_fractions()) throw NoFractions(std::string(name()) + " has no inverse of " + n.get_str());
  if (n <= 0) throw Error("DomainError", "inv_nat expects a positive natural");
  if (kind_ == SemiringKind::Bool) return one();
  return Scalar(mpq_class(mpz_class(1), n));
}

Scalar Semiring::inv_factorial(unsigned n) const {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return inv_nat(f);
}

bool Semiring::admits(const Scalar& a) const {
  const mpq_class& v = a.value();
  switch (kind_) {
    case SemiringKind::Nat: return v.get_den() == 1 && sgn(v) >= 0;
    case SemiringKind::Int: return v.get_den() == 1;
    case SemiringKind::Rat: return true;
    case SemiringKind::RatNonneg: return sgn(v) >= 0;
    case SemiringKind::Bool: return v == 0 || v == 1;
  }
  return false;
}

Scalar Semiring::parse_literal(std::string_view text) const {
  std::string t(text);
  bool ok = !t.empty();
  std::size_t i = 0;
  if (ok && (t[0] == '-' || t[0] == '+')) i = 1;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t k = b; k < e; ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    ok = ok && digits(i, t.size());
  } else {
    ok = ok && digits(i, slash) && digits(slash + 1, t.size());
  }
  if (!ok) throw UnboundScalarLiteral("malformed literal '" + t + "'");
  if (t[0] == '-' && !is_ring())
    throw UnboundScalarLiteral("negative literal '" + t + "' in " + std::string(name()));
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(t.substr(t[0] == '+' ? 1 : 0)));
  } else {
    mpz_class num(t.substr(t[0] == '+' ? 1 : 0, slash - (t[0] == '+' ? 1 : 0)));
    mpz_class den(t.substr(slash + 1));
    if (den == 0) throw UnboundScalarLiteral("zero denominator in '" + t + "'");
    v = mpq_class(num, den);
  }
  v.canonicalize();
  Scalar s(v);
  if (!admits(s))
    throw UnboundScalarLiteral("literal '" + t + "' is not a " + std::string(name()) + " value");
  return s;
}

std::string Semiring::render(const Scalar& a) const { return a.value().get_str(); }

Scalar nat_embed(const Semiring& d, std::uint64_t n) { return d.embed(n); }
Scalar inv_nat(const Semiring& d, std::uint64_t n) { return d.inv_nat(n); }

Split2 split2(const Semiring& d, const Scalar& a1, const Scalar& a2, const Scalar& b1,
              const Scalar& b2) {
  if (!d.eq(d.add(a1, a2), d.add(b1, b2)))
    throw MarginalMismatch("a1+a2 differs from b1+b2");
  Split2 r;
  switch (d.kind()) {
    case SemiringKind::Int:
    case SemiringKind::Rat:
      r.c[0][0] = b1;
      r.c[0][1] = minus(d, a1, b1);
      r.c[1][0] = d.zero();
      r.c[1][1] = a2;
      break;
    case SemiringKind::Bool:
      // Idempotent addition: the product matrix refines both sides.
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.c[i][j] = d.mul(i ? a2 : a1, j ? b2 : b1);
      break;
    case SemiringKind::Nat:
    case SemiringKind::RatNonneg: {
      const Scalar& m = a1 < b1 ? a1 : b1;
      r.c[0][0] = m;
      r.c[0][1] = minus(d, a1, m);
      r.c[1][0] = minus(d, b1, m);
      r.c[1][1] = minus(d, a2, r.c[1][0]);
      break;
    }
  }
  return r;
}

std::vector<std::vector<Scalar>> split_matrix(const Semiring& d, const std::vector<Scalar>& a,
                                              const std::vector<Scalar>& b) {
  if (a.empty() || b.empty()) throw MarginalMismatch("empty decomposition");
  if (!d.eq(sum_of(d, a), sum_of(d, b))) throw MarginalMismatch("totals differ");
  const std::size_t p = a.size(), q = b.size();
  std::vector<std::vector<Scalar>> c(p, std::vector<Scalar>(q));
  if (p == 1) {
    c[0] = b;
    return c;
  }
  if (q == 1) {
    for (std::size_t i = 0; i < p; ++i) c[i][0] = a[i];
    return c;
  }
  Scalar ra = sum_of(d, a, 1), rb = sum_of(d, b, 1);
  Split2 s = split2(d, a[0], ra, b[0], rb);
  // first row beyond column 0, and the block below it
  std::vector<Scalar> tail_b(b.begin() + 1, b.end());
  auto top = split_matrix(d, {s.c[0][1], s.c[1][1]}, tail_b);
  std::vector<Scalar> tail_a(a.begin() + 1, a.end());
  auto left = split_matrix(d, tail_a, {s.c[1][0], s.c[1][1]});
  std::vector<Scalar> left_rest(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) left_rest[i] = left[i][1];
  auto block = split_matrix(d, left_rest, top[1]);
  c[0][0] = s.c[0][0];
  for (std::size_t j = 1; j < q; ++j) c[0][j] = top[0][j - 1];
  for (std::size_t i = 1; i < p; ++i) {
    c[i][0] = left[i - 1][0];
    for (std::size_t j = 1; j < q; ++j) c[i][j] = block[i - 1][j - 1];
  }
  return c;
}

std::size_t SplitTensor::offset(const std::vector<std::size_t>& index) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) off = off * shape[i] + index[i];
  return off;
}

const Scalar& SplitTensor::at(const std::vector<std::size_t>& index) const {
  return cells.at(offset(index));
}

SplitTensor split_multi(const Semiring& d, const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw MarginalMismatch("no rows");
  for (const auto& r : rows)
    if (r.empty()) throw MarginalMismatch("empty row");
  Scalar total = sum_of(d, rows[0]);
  for (const auto& r : rows)
    if (!d.eq(sum_of(d, r), total)) throw MarginalMismatch("row totals differ");
  SplitTensor t;
  t.shape = {rows[0].size()};
  t.cells = rows[0];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto m = split_matrix(d, t.cells, rows[i]);
    std::vector<Scalar> next;
    next.reserve(t.cells.size() * rows[i].size());
    for (auto& line : m)
      for (auto& c : line) next.push_back(std::move(c));
    t.shape.push_back(rows[i].size());
    t.cells = std::move(next);
  }
  return t;
}

}  // namespace rlw
