#include "ulrich/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "ulrich/errors.hpp"

namespace ulrich {

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(*ring_, *g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& text : generators) gens.push_back(Polynomial::parse(ring, text));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Scalar(1));
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(generators_); });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& p) const {
  require_same_ring(*ring_, *p.ring());
  if (p.is_zero()) return true;
  const auto& gb = groebner();
  if (gb.empty()) return false;
  return reduce(p, gb).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  const auto& gb = groebner();
  if (gb.empty()) return p;
  return reduce(p, gb);
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.to_string());
  return out;
}

std::vector<std::string> Ideal::groebner_strings() const {
  std::vector<std::string> out;
  for (const auto& g : groebner()) out.push_back(g.to_string());
  return out;
}

bool member(const Polynomial& p, const Ideal& I) { return I.contains(p); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring(), *J.ring());
  const auto& a = I.groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
  if (p.is_zero()) return;
  p = p.monic();
  for (const auto& q : out) {
    if (q == p) return;
  }
  out.push_back(std::move(p));
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring(), *J.ring());
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_extend(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring(), *J.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) push_unique(gens, f * g);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int n) {
  if (n < 1) throw PreconditionError("ideal power needs n >= 1");
  Ideal out = I;
  for (int k = 1; k < n; ++k) out = ideal_product(out, I);
  return out;
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring(), *J.ring());
  const RingPtr& ring = I.ring();
  if (I.generators().empty() || J.generators().empty()) return Ideal::zero(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  std::vector<std::string> names{"_u"};
  for (const auto& n : ring->names()) {
    if (n == "_u") throw PreconditionError("variable name _u is reserved");
    names.push_back(n);
  }
  RingPtr ext = Ring::make(names, MonomialOrder::block_elim(1));
  Polynomial u = Polynomial::variable(ext, 0);
  Polynomial one_minus_u = Polynomial::constant(ext, Scalar(1)) - u;

  std::vector<Polynomial> gens;
  for (const auto& f : I.groebner()) gens.push_back(u * f.map_to(ext));
  for (const auto& g : J.groebner()) gens.push_back(one_minus_u * g.map_to(ext));

  std::vector<Polynomial> out;
  for (const auto& h : buchberger(gens)) {
    if (h.lm()[0] == 0) out.push_back(h.map_to(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  require_same_ring(*I.ring(), *g.ring());
  if (g.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (I.contains(g)) return Ideal::unit(I.ring());
  Ideal inter = ideal_intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : inter.groebner()) {
    Division d = divide(h, {g});
    if (!d.remainder.is_zero()) throw InvariantViolation("intersection element not divisible by g");
    gens.push_back(d.quotients[0]);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  require_same_ring(*I.ring(), *J.ring());
  if (J.generators().empty()) throw PreconditionError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal c = ideal_colon(I, g);
    if (c.is_unit()) continue;
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  if (!acc) return Ideal::unit(I.ring());
  return Ideal(I.ring(), acc->groebner());
}

Polynomial determinant(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) throw PreconditionError("empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  }
  if (n == 1) return m[0][0];
  RingPtr ring = m[0][0].ring();
  Polynomial acc(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

namespace {

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

Ideal minors(const PolyMatrix& m, int k) {
  if (m.empty() || m[0].empty()) throw PreconditionError("empty matrix");
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) throw PreconditionError("ragged matrix");
  }
  if (k < 1 || k > std::min(rows, cols)) throw OutOfRange("minor size out of range");
  RingPtr ring = m[0][0].ring();
  std::vector<Polynomial> gens;
  for (const auto& rs : combinations(rows, k)) {
    for (const auto& cs : combinations(cols, k)) {
      PolyMatrix sub;
      for (int r : rs) {
        std::vector<Polynomial> row;
        for (int c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(ring, std::move(gens));
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I, std::size_t cap) {
  const RingPtr& ring = I.ring();
  int n = ring->nvars();
  const auto& gb = I.groebner();
  if (I.is_unit()) return std::vector<Monomial>{};
  std::vector<int> bound(n, -1);
  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    const Monomial& m = g.lm();
    leads.push_back(m);
    for (int v = 0; v < n; ++v) {
      if (m[v] == static_cast<int>(m.deg) && (bound[v] < 0 || m[v] < bound[v])) bound[v] = m[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (bound[v] < 0) return std::nullopt;
  }
  auto in_lead_ideal = [&](const Monomial& m) {
    for (const auto& l : leads) {
      if (l.divides(m)) return true;
    }
    return false;
  };

  std::vector<Monomial> out;
  Monomial cur(n);
  auto walk = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (out.size() >= cap) throw PreconditionError("standard monomial enumeration exceeds cap");
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      if (in_lead_ideal(cur)) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  walk(walk, 0);
  return out;
}

std::optional<std::uint64_t> quotient_dim(const Ideal& I) {
  auto mons = standard_monomials(I);
  if (!mons) return std::nullopt;
  return mons->size();
}

PresentedQuotient::PresentedQuotient(Ideal defining)
    : defining_(std::move(defining)), maximal_(Ideal::maximal(defining_.ring())) {
  for (const auto& g : defining_.generators()) {
    for (const auto& t : g.terms()) {
      if (t.mono.deg < 2) {
        throw PreconditionError("defining ideal not inside m^2: " + g.to_string());
      }
    }
  }
}

Ideal PresentedQuotient::lift(const Ideal& I) const {
  require_same_ring(*ring(), *I.ring());
  std::vector<Polynomial> gens = defining_.groebner();
  gens.insert(gens.end(), I.generators().begin(), I.generators().end());
  return Ideal(ring(), std::move(gens));
}

Ideal PresentedQuotient::parse_ideal(const std::vector<std::string>& generators) const {
  return Ideal::parse(ring(), generators);
}

namespace {

std::vector<Polynomial> pure_powers(const RingPtr& ring, int n) {
  std::vector<Polynomial> out;
  for (int v = 0; v < ring->nvars(); ++v) out.push_back(Polynomial::variable(ring, v, n));
  return out;
}

// J + (x_1^N, ..., x_n^N) agrees with J near the origin once N reaches the
// nilpotency index there, and is the unit ideal at every other point of V(J)
// because some coordinate is a unit there. Dimensions grow with N and
// stabilize exactly when x_k^N already lies in the origin component.
Ideal truncate_stably(const Ideal& J, int budget) {
  const RingPtr& ring = J.ring();
  auto dim = quotient_dim(J);
  if (dim) {
    if (*dim == 0) return J;
    int d = static_cast<int>(*dim);
    std::vector<Polynomial> extra;
    for (auto& p : pure_powers(ring, d)) {
      if (!J.contains(p)) extra.push_back(std::move(p));
    }
    if (extra.empty()) return J;
    return Ideal(ring, ideal_extend(J, extra).groebner());
  }
  std::optional<Ideal> prev;
  std::uint64_t prev_dim = 0;
  for (int n = 1; n <= budget; n *= 2) {
    Ideal cur(ring, ideal_extend(J, pure_powers(ring, n)).groebner());
    std::uint64_t cur_dim = *quotient_dim(cur);
    if (prev && cur_dim == prev_dim) return *prev;
    prev = cur;
    prev_dim = cur_dim;
  }
  throw BudgetExhausted("origin truncation did not stabilize within N <= " + std::to_string(budget));
}

}  // namespace

Ideal origin_component(const PresentedQuotient& A, const Ideal& I, int budget) {
  return truncate_stably(A.lift(I), budget);
}

std::uint64_t local_length(const PresentedQuotient& A, const Ideal& I, int budget) {
  Ideal J = A.lift(I);
  if (J.is_unit()) return 0;
  return *quotient_dim(truncate_stably(J, budget));
}

std::uint64_t local_length_by_powers_of_m(const PresentedQuotient& A, const Ideal& I, int budget) {
  Ideal J = A.lift(I);
  const RingPtr& ring = J.ring();
  int n = ring->nvars();
  std::optional<std::uint64_t> prev;
  for (int N = 1; N <= budget; ++N) {
    std::vector<Polynomial> extra;
    Monomial m(n);
    auto walk = [&](auto&& self, int v, int left) -> void {
      if (v == n - 1) {
        m.set(v, left);
        extra.push_back(Polynomial::term(ring, m, Scalar(1)));
        m.set(v, 0);
        return;
      }
      for (int e = left; e >= 0; --e) {
        m.set(v, e);
        self(self, v + 1, left - e);
      }
      m.set(v, 0);
    };
    walk(walk, 0, N);
    std::uint64_t cur = *quotient_dim(ideal_extend(J, extra));
    if (prev && *prev == cur) return cur;
    prev = cur;
  }
  throw BudgetExhausted("m-adic truncation did not stabilize within N <= " + std::to_string(budget));
}

std::uint64_t min_gens(const PresentedQuotient& A, const Ideal& I, int budget) {
  std::uint64_t base = local_length(A, I, budget);
  std::uint64_t wider = local_length(A, ideal_product(A.maximal(), I), budget);
  if (wider < base) throw InvariantViolation("l(A/mI) < l(A/I)");
  return wider - base;
}

}  // namespace ulrich
