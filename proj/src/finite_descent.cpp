#include "picmod/finite_descent.hpp"

#include <numeric>

namespace picmod {

QZ QZ::make(long long n, long long d) {
  if (d == 0) throw PreconditionViolated("QZ with zero denominator");
  if (d < 0) {
    d = -d;
    n = -n;
  }
  n %= d;
  if (n < 0) n += d;
  long long g = std::gcd(n, d);
  return QZ{n / g, d / g};
}

QZ QZ::operator+(const QZ& o) const {
  long long l = std::lcm(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

QZ QZ::operator-() const { return make(-num, den); }

QZ QZ::scaled(long long k) const { return make(num * (k % den), den); }

std::string QZ::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

long long FinAbGroup::size() const {
  long long s = 1;
  for (long long o : orders) s *= o;
  return s;
}

long long FinAbGroup::exponent() const {
  long long e = 1;
  for (long long o : orders) e = std::lcm(e, o);
  return e;
}

FinAbGroup::Elem FinAbGroup::generator(std::size_t i) const {
  Elem e = zero();
  e[i] = 1 % orders[i];
  return e;
}

FinAbGroup::Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
  Elem r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
  return r;
}

FinAbGroup::Elem FinAbGroup::neg(const Elem& a) const {
  Elem r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a[i]) % orders[i];
  return r;
}

FinAbGroup::Elem FinAbGroup::scaled(long long k, const Elem& a) const {
  Elem r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long long v = (k % orders[i]) * a[i] % orders[i];
    if (v < 0) v += orders[i];
    r[i] = v;
  }
  return r;
}

bool FinAbGroup::is_zero(const Elem& a) const {
  for (long long v : a)
    if (v != 0) return false;
  return true;
}

FinAbGroup::Elem FinAbGroup::element_at(long long index) const {
  Elem e(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    e[i] = index % orders[i];
    index /= orders[i];
  }
  return e;
}

std::string FinAbGroup::name() const {
  if (orders.empty()) return "trivial";
  std::string s;
  std::size_t i = 0;
  while (i < orders.size()) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (!s.empty()) s += " x ";
    s += "(Z/" + std::to_string(orders[i]) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

void validate_matrix(const FinAbGroup& g,
                     const std::vector<std::vector<QZ>>& m) {
  std::size_t n = g.num_generators();
  if (m.size() != n)
    throw PreconditionViolated("cocycle matrix has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw PreconditionViolated("cocycle matrix has wrong number of columns");
    for (std::size_t j = 0; j < n; ++j) {
      long long killer = std::gcd(g.orders[i], g.orders[j]);
      if (!m[i][j].scaled(killer).is_zero())
        throw PreconditionViolated(
            "matrix entry order incompatible with the generator orders");
    }
  }
}

QZ eval_matrix(const FinAbGroup& g, const std::vector<std::vector<QZ>>& m,
               const FinAbGroup::Elem& x, const FinAbGroup::Elem& y) {
  if (x.size() != g.num_generators() || y.size() != g.num_generators())
    throw GroupMismatch("element does not belong to the cocycle's group");
  QZ s;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      s = s + m[i][j].scaled(x[i] * y[j]);
  return s;
}

std::vector<std::vector<QZ>> zero_matrix(std::size_t n) {
  return std::vector<std::vector<QZ>>(n, std::vector<QZ>(n));
}

}  // namespace

BilinearCocycle BilinearCocycle::zero(const FinAbGroup& g) {
  return BilinearCocycle{g, zero_matrix(g.num_generators())};
}

void BilinearCocycle::validate() const { validate_matrix(group, entries); }

QZ BilinearCocycle::eval(const FinAbGroup::Elem& x,
                         const FinAbGroup::Elem& y) const {
  return eval_matrix(group, entries, x, y);
}

AlternatingForm AlternatingForm::zero(const FinAbGroup& g) {
  return AlternatingForm{g, zero_matrix(g.num_generators())};
}

AlternatingForm AlternatingForm::from_upper(
    const FinAbGroup& g, const std::vector<std::vector<QZ>>& upper) {
  std::size_t n = g.num_generators();
  AlternatingForm e{g, zero_matrix(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      e.entries[i][j] = upper[i][j];
      e.entries[j][i] = -upper[i][j];
    }
  e.validate();
  return e;
}

void AlternatingForm::validate() const {
  validate_matrix(group, entries);
  std::size_t n = group.num_generators();
  for (std::size_t i = 0; i < n; ++i) {
    if (!entries[i][i].is_zero())
      throw PreconditionViolated("alternating form with nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (entries[i][j] != -entries[j][i])
        throw PreconditionViolated("alternating form matrix not antisymmetric");
  }
}

QZ AlternatingForm::eval(const FinAbGroup::Elem& x,
                         const FinAbGroup::Elem& y) const {
  return eval_matrix(group, entries, x, y);
}

bool AlternatingForm::operator==(const AlternatingForm& o) const {
  return group == o.group && entries == o.entries;
}

AlternatingForm weil_form(long long r, int genus) {
  if (r < 1 || genus < 1)
    throw PreconditionViolated("weil_form requires r >= 1 and genus >= 1");
  FinAbGroup g{std::vector<long long>(2 * genus, r)};
  AlternatingForm e = AlternatingForm::zero(g);
  for (int i = 0; i < genus; ++i) {
    e.entries[2 * i][2 * i + 1] = QZ::make(1, r);
    e.entries[2 * i + 1][2 * i] = QZ::make(-1, r);
  }
  return e;
}

AlternatingForm form_power(const AlternatingForm& e, long long k) {
  AlternatingForm out = e;
  for (auto& row : out.entries)
    for (auto& v : row) v = v.scaled(k);
  return out;
}

long long form_order(const AlternatingForm& e) {
  long long n = 1;
  for (const auto& row : e.entries)
    for (const auto& v : row) n = std::lcm(n, v.order());
  return n;
}

bool is_trivial(const AlternatingForm& e) { return form_order(e) == 1; }

AlternatingForm restrict_to_torsion(const AlternatingForm& e, long long s) {
  if (e.group.orders.empty())
    throw PreconditionViolated("cannot restrict a form on the trivial group");
  long long r = e.group.orders[0];
  for (long long o : e.group.orders)
    if (o != r)
      throw PreconditionViolated("restrict_to_torsion requires (Z/r)^{2g}");
  if (s < 1 || r % s != 0)
    throw NotADivisor(std::to_string(s) + " does not divide " + std::to_string(r));
  long long step = r / s;
  FinAbGroup sub{std::vector<long long>(e.group.orders.size(), s)};
  AlternatingForm out = AlternatingForm::zero(sub);
  for (std::size_t i = 0; i < sub.num_generators(); ++i)
    for (std::size_t j = 0; j < sub.num_generators(); ++j)
      out.entries[i][j] = e.entries[i][j].scaled(step * step);
  out.validate();
  return out;
}

HeisenbergElement heisenberg_multiply(const BilinearCocycle& phi,
                                      const HeisenbergElement& x,
                                      const HeisenbergElement& y) {
  if (x.g.size() != phi.group.num_generators() ||
      y.g.size() != phi.group.num_generators())
    throw GroupMismatch("Heisenberg elements over the wrong group");
  return {phi.group.add(x.g, y.g), x.t + y.t + phi.eval(x.g, y.g)};
}

HeisenbergElement heisenberg_inverse(const BilinearCocycle& phi,
                                     const HeisenbergElement& x) {
  // (a,t)^{-1} = (-a, -t + phi(a,a)) since phi(a,-a) = -phi(a,a).
  return {phi.group.neg(x.g), -x.t + phi.eval(x.g, x.g)};
}

HeisenbergElement heisenberg_power(const BilinearCocycle& phi,
                                   const HeisenbergElement& x, long long n) {
  if (n < 0) throw PreconditionViolated("negative Heisenberg power");
  HeisenbergElement acc{phi.group.zero(), QZ{}};
  for (long long i = 0; i < n; ++i) acc = heisenberg_multiply(phi, acc, x);
  return acc;
}

BilinearCocycle upper_triangular_cocycle(const AlternatingForm& e) {
  BilinearCocycle phi = BilinearCocycle::zero(e.group);
  std::size_t n = e.group.num_generators();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) phi.entries[i][j] = e.entries[i][j];
  return phi;
}

AlternatingForm commutator_form(const BilinearCocycle& phi) {
  std::size_t n = phi.group.num_generators();
  AlternatingForm e = AlternatingForm::zero(phi.group);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e.entries[i][j] = phi.entries[i][j] + (-phi.entries[j][i]);
  e.validate();
  return e;
}

QZ section_power(const BilinearCocycle& phi, const FinAbGroup::Elem& alpha,
                 long long r) {
  if (!phi.group.is_zero(phi.group.scaled(r, alpha)))
    throw NotAnnihilated("r does not annihilate alpha");
  QZ closed = phi.eval(alpha, alpha).scaled(r * (r - 1) / 2);
  QZ literal = heisenberg_power(phi, {alpha, QZ{}}, r).t;
  if (closed != literal)
    throw PreconditionViolated("section power law violated (internal check)");
  return closed;
}

bool epsilon_quadratic_check(const BilinearCocycle& phi, long long r) {
  if (r % 2 != 0) throw OddR("epsilon quadraticity is a statement for even r");
  if (r % phi.group.exponent() != 0)
    throw PreconditionViolated("r must annihilate the group");
  AlternatingForm e = commutator_form(phi);
  long long n = phi.group.size();
  auto index_of = [&](const FinAbGroup::Elem& el) {
    long long idx = 0, mul = 1;
    for (std::size_t i = 0; i < phi.group.orders.size(); ++i) {
      idx += el[i] * mul;
      mul *= phi.group.orders[i];
    }
    return idx;
  };
  std::vector<QZ> eps(n);
  for (long long i = 0; i < n; ++i)
    eps[i] = section_power(phi, phi.group.element_at(i), r);
  for (long long i = 0; i < n; ++i) {
    auto a = phi.group.element_at(i);
    for (long long j = 0; j < n; ++j) {
      auto b = phi.group.element_at(j);
      QZ lhs = eps[index_of(phi.group.add(a, b))];
      QZ rhs = eps[i] + eps[j] + e.eval(a, b).scaled(r / 2);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DescentResult descent_at_power(const AlternatingForm& e, long long r) {
  if (r < 1 || r % e.group.exponent() != 0)
    throw PreconditionViolated("r must annihilate the group");
  if (form_order(e) != 1 && r % form_order(e) != 0)
    throw PreconditionViolated("r must annihilate the form");
  bool at_r = (r % 2 != 0) || is_trivial(form_power(e, r / 2));
  return DescentResult{at_r, true};
}

bool descent_bruteforce(const BilinearCocycle& phi, long long r,
                        long long enum_cap) {
  long long n = phi.group.size();
  if (n > enum_cap)
    throw GroupTooLarge("group of size " + std::to_string(n) +
                        " exceeds the enumeration cap");
  if (r < 1 || r % phi.group.exponent() != 0)
    throw PreconditionViolated("r must annihilate the group");
  std::vector<FinAbGroup::Elem> elems(n);
  std::vector<QZ> f(n);
  for (long long i = 0; i < n; ++i) {
    elems[i] = phi.group.element_at(i);
    f[i] = heisenberg_power(phi, {elems[i], QZ{}}, r).t;
  }
  // index lookup by mixed radix
  auto index_of = [&](const FinAbGroup::Elem& e) {
    long long idx = 0, mul = 1;
    for (std::size_t i = 0; i < phi.group.orders.size(); ++i) {
      idx += e[i] * mul;
      mul *= phi.group.orders[i];
    }
    return idx;
  };
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long k = index_of(phi.group.add(elems[i], elems[j]));
      if (f[k] != f[i] + f[j]) return false;
    }
  return true;
}

int hecke_det_character(long long r, long long s, long long h) {
  if (s < 1 || r % s != 0)
    throw NotADivisor(std::to_string(s) + " does not divide " + std::to_string(r));
  if (h <= 0 || h >= r)
    throw PreconditionViolated("h must satisfy 0 < h < r");
  // det = prod_{i=0}^{s-1} zeta^{i (r/s)}, zeta of order s.
  QZ det;
  for (long long i = 0; i < s; ++i) det = det + QZ::make(i, s).scaled(r / s);
  QZ powed = det.scaled(h);
  if (!powed.is_zero() && powed != QZ::make(1, 2))
    throw PreconditionViolated("Hecke determinant character is not a sign");
  return powed.is_zero() ? 1 : -1;
}

bool canonical_descends(long long r, long long s, long long h) {
  if (s < 1 || r % s != 0)
    throw NotADivisor(std::to_string(s) + " does not divide " + std::to_string(r));
  return !(s % 2 == 0 && h % 2 == 1 && (r / s) % 2 == 1);
}

}  // namespace picmod
