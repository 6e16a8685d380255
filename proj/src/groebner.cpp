#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/ideal.hpp"

namespace ulrich {

namespace {

thread_local BuchbergerStats g_stats;

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Builder {
 public:
  explicit Builder(RingPtr ring) : ring_(std::move(ring)) {}

  void add_input(const Polynomial& p) {
    if (unit_) return;
    Polynomial h = reduce(p, active_polys_);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = select_pair();
      Pair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++g_stats.pairs_reduced;
      Polynomial s = spoly(pair);
      Polynomial h = reduce(s, active_polys_);
      if (h.is_zero()) {
        ++g_stats.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
  }

  std::vector<Polynomial> finish() const {
    if (unit_) return {Polynomial::constant(ring_, Scalar(1))};
    std::vector<Polynomial> basis = active_polys_;
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(basis[l]);
      }
      const Term& lead = basis[k].lead();
      Polynomial tail = basis[k] - Polynomial::term(ring_, lead.mono, lead.coef);
      Polynomial g = Polynomial::term(ring_, lead.mono, lead.coef);
      g += others.empty() ? tail : reduce(tail, others);
      out.push_back(g.monic());
    }
    const MonomialOrder& ord = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.lm(), b.lm()) > 0;
    });
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Polynomial> active_polys_;
  std::vector<Pair> pairs_;
  bool unit_ = false;

  std::size_t select_pair() const {
    const MonomialOrder& ord = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      int c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
  }

  Polynomial spoly(const Pair& pair) const {
    const Polynomial& f = polys_[pair.i];
    const Polynomial& g = polys_[pair.j];
    Polynomial s = f.mul_term(pair.lcm / f.lm(), Scalar(1));
    s.add_multiple(Scalar(-1), pair.lcm / g.lm(), g);
    return s;
  }

  void insert(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    update(hi);
    active_polys_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) active_polys_.push_back(polys_[k]);
    }
  }

  // Gebauer-Moeller installation of the pairs created by polys_[h].
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) fresh.push_back({g, h, lcm(polys_[g].lm(), lh)});
    }
    g_stats.pairs_considered += fresh.size();

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      bool coprime = polys_[p.i].lm().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t l = k + 1; l < fresh.size() && !dominated; ++l) {
          dominated = fresh[l].lcm.divides(p.lcm);
        }
        for (std::size_t l = 0; l < kept.size() && !dominated; ++l) {
          dominated = kept[l].lcm.divides(p.lcm);
        }
      }
      if (coprime || !dominated) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].lm(), lh) != p.lcm &&
                  lcm(polys_[p.j].lm(), lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!polys_[p.i].lm().coprime(lh)) next.push_back(p);
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
    }
  }
};

}  // namespace

const BuchbergerStats& last_buchberger_stats() { return g_stats; }

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
  g_stats = {};
  std::vector<Polynomial> input;
  for (const auto& g : generators) {
    if (!g.is_zero()) input.push_back(g);
  }
  if (input.empty()) return {};
  RingPtr ring = input.front().ring();
  for (const auto& g : input) require_same_ring(*ring, *g.ring());

  const MonomialOrder& ord = ring->order();
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lm(), b.lm()) < 0;
  });
  Builder builder(ring);
  for (const auto& g : input) builder.add_input(g);
  builder.run();
  return builder.finish();
}

}  // namespace ulrich
