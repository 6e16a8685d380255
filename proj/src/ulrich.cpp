#include "ulrich/ulrich.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"

namespace ulrich {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ulrich:
      return "ulrich";
    case Verdict::GoodNotUlrich:
      return "good-not-ulrich";
    case Verdict::NotGood:
      return "not-good";
    case Verdict::NoReductionFound:
      return "no-reduction-found";
    case Verdict::TraceNotContained:
      return "trace-not-contained";
    case Verdict::ParameterIdeal:
      return "parameter-ideal";
  }
  return "?";
}

bool UlrichCertificate::numeric_criterion() const {
  return e0.has_value() && mu >= 1 && *e0 == (mu - 1) * len;
}

namespace {

void require_two_generators_inside(const PresentedQuotient& A, const Ideal& I, const Ideal& Q) {
  if (Q.generators().size() != 2) throw PreconditionError("a reduction needs exactly two generators");
  Ideal lifted = A.lift(I);
  for (const auto& q : Q.generators()) {
    if (!lifted.contains(q)) throw PreconditionError("reduction generator " + q.to_string() + " not in I");
  }
}

// Local comparison of QI + a against the known l(A/I^2).
bool stable_given(const PresentedQuotient& A, const Ideal& I, const Ideal& Q, std::uint64_t len_square) {
  std::uint64_t lq = local_length(A, ideal_product(Q, I));
  if (lq < len_square) throw InvariantViolation("l(A/QI) < l(A/I^2) although QI lies in I^2");
  return lq == len_square;
}

bool good_given(const PresentedQuotient& A, const Ideal& I, const Ideal& Q, std::uint64_t len) {
  Ideal colon = ideal_colon(A.lift(Q), A.lift(I));
  return local_length(A, colon) == len;
}

// Coefficient vectors over the pool, first nonzero entry equal to 1, ordered
// by support size and then by pool position.
std::vector<std::vector<int>> normalized_vectors(std::size_t k, const std::vector<Scalar>& pool) {
  std::vector<int> nonzero;
  int one = -1;
  for (std::size_t p = 0; p < pool.size(); ++p) {
    if (pool[p].is_zero()) continue;
    nonzero.push_back(static_cast<int>(p));
    if (pool[p].is_one()) one = static_cast<int>(p);
  }
  std::vector<std::vector<int>> out;
  if (one < 0 || k == 0) return out;
  std::vector<int> cur(k, -1);
  auto walk = [&](auto&& self, std::size_t pos, bool started) -> void {
    if (pos == k) {
      if (started) out.push_back(cur);
      return;
    }
    cur[pos] = -1;
    self(self, pos + 1, started);
    if (!started) {
      cur[pos] = one;
      self(self, pos + 1, true);
    } else {
      for (int p : nonzero) {
        cur[pos] = p;
        self(self, pos + 1, true);
      }
    }
    cur[pos] = -1;
  };
  walk(walk, 0, false);
  auto support = [](const std::vector<int>& v) {
    return std::count_if(v.begin(), v.end(), [](int p) { return p >= 0; });
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return support(a) < support(b); });
  return out;
}

bool proportional_support(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] >= 0) != (b[k] >= 0)) return false;
  }
  return true;
}

}  // namespace

bool is_reduction_stable(const PresentedQuotient& A, const Ideal& I, const Ideal& Q) {
  require_two_generators_inside(A, I, Q);
  if (!quotient_dim(A.lift(Q))) {
    try {
      local_length(A, Q);
    } catch (const BudgetExhausted&) {
      return false;
    }
  }
  return stable_given(A, I, Q, local_length(A, ideal_power(I, 2)));
}

std::optional<Ideal> find_reduction(const PresentedQuotient& A, const Ideal& I, const ReductionSearchPolicy& policy,
                                    std::size_t* tried) {
  const RingPtr& ring = A.ring();
  std::size_t count = 0;
  auto report = [&]() {
    if (tried) *tried = count;
  };
  Ideal lifted = A.lift(I);
  std::uint64_t len_square = local_length(A, ideal_power(I, 2));

  auto attempt = [&](const Polynomial& f, const Polynomial& g) -> std::optional<Ideal> {
    ++count;
    Ideal Q(ring, {f, g});
    if (Q.generators().size() != 2) return std::nullopt;
    if (!quotient_dim(A.lift(Q))) return std::nullopt;
    if (stable_given(A, I, Q, len_square)) return Q;
    return std::nullopt;
  };

  for (const auto& seed : policy.seeds) {
    if (count >= policy.max_candidates) break;
    if (seed.size() != 2) throw PreconditionError("a seed must list two generators");
    Polynomial f = Polynomial::parse(ring, seed[0]);
    Polynomial g = Polynomial::parse(ring, seed[1]);
    if (!lifted.contains(f) || !lifted.contains(g)) continue;
    if (auto q = attempt(f, g)) {
      report();
      return q;
    }
  }

  const auto& gens = I.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (count >= policy.max_candidates) {
        report();
        return std::nullopt;
      }
      if (auto q = attempt(gens[a], gens[b])) {
        report();
        return q;
      }
    }
  }

  auto vectors = normalized_vectors(gens.size(), policy.pool);
  auto combine = [&](const std::vector<int>& v) {
    Polynomial p(ring);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] >= 0) p += gens[k].scaled(policy.pool[v[k]]);
    }
    return p;
  };
  auto support = [](const std::vector<int>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int p) { return p >= 0; }));
  };
  for (std::size_t total = 3; total <= 2 * gens.size(); ++total) {
    for (std::size_t a = 0; a < vectors.size(); ++a) {
      std::size_t sa = support(vectors[a]);
      if (sa >= total) continue;
      for (std::size_t b = a + 1; b < vectors.size(); ++b) {
        if (sa + support(vectors[b]) != total) continue;
        if (proportional_support(vectors[a], vectors[b]) && sa == 1) continue;
        if (count >= policy.max_candidates) {
          report();
          return std::nullopt;
        }
        Polynomial f = combine(vectors[a]);
        Polynomial g = combine(vectors[b]);
        if (f.is_zero() || g.is_zero()) continue;
        if (auto q = attempt(f, g)) {
          report();
          return q;
        }
      }
    }
  }
  report();
  return std::nullopt;
}

bool good_check(const PresentedQuotient& A, const Ideal& I, const Ideal& Q) {
  require_two_generators_inside(A, I, Q);
  if (!is_reduction_stable(A, I, Q)) throw PreconditionError("good_check needs a stable reduction");
  return good_given(A, I, Q, local_length(A, I));
}

UlrichCertificate ulrich_check(const PresentedQuotient& A, const Ideal& I, const ReductionSearchPolicy& policy,
                               const std::optional<Ideal>& trace) {
  UlrichCertificate cert(I);
  cert.len = local_length(A, I);
  if (cert.len == 0) throw PreconditionError("ulrich_check needs a proper m-primary ideal");
  cert.mu = min_gens(A, I);
  cert.len_square = local_length(A, ideal_power(I, 2));
  cert.free_test = cert.len_square - cert.len == cert.mu * cert.len;

  if (trace) {
    Ideal lifted = A.lift(I);
    bool inside = true;
    for (const auto& g : trace->generators()) inside = inside && lifted.contains(g);
    cert.contains_trace = inside;
    if (!inside) {
      cert.verdict = Verdict::TraceNotContained;
      return cert;
    }
  }

  if (cert.mu == 2) {
    cert.verdict = Verdict::ParameterIdeal;
    return cert;
  }

  cert.reduction = find_reduction(A, I, policy, &cert.candidates_tried);
  if (!cert.reduction) {
    cert.verdict = Verdict::NoReductionFound;
    return cert;
  }
  cert.stable = true;
  cert.e0 = local_length(A, *cert.reduction);
  cert.good = good_given(A, I, *cert.reduction, cert.len);
  bool numeric = cert.numeric_criterion();
  if (numeric != cert.free_test) {
    throw InvariantViolation("freeness test disagrees with e0 = (mu - 1) * len for " +
                             Ideal(I).generator_strings().front());
  }
  if (numeric) {
    if (!cert.good) throw InvariantViolation("numerically Ulrich ideal fails the good-ideal test");
    cert.verdict = Verdict::Ulrich;
  } else {
    cert.verdict = cert.good ? Verdict::GoodNotUlrich : Verdict::NotGood;
  }
  return cert;
}

namespace {

struct TraceShape {
  int power_var = -1;
  int exponent = 0;
};

TraceShape detect_shape(const Ideal& trace) {
  const RingPtr& ring = trace.ring();
  int n = ring->nvars();
  const auto& gb = trace.groebner();
  TraceShape shape;
  std::vector<bool> linear(n, false);
  int powers = 0;
  for (const auto& g : gb) {
    if (!g.is_monomial()) throw ShapeError("trace basis element " + g.to_string() + " is not a monomial");
    const Monomial& m = g.lm();
    int support = 0;
    int var = -1;
    for (int v = 0; v < n; ++v) {
      if (m[v] > 0) {
        ++support;
        var = v;
      }
    }
    if (support != 1) throw ShapeError("trace basis element " + g.to_string() + " is not a pure power");
    if (m[var] == 1) {
      linear[var] = true;
    } else {
      ++powers;
      shape.power_var = var;
      shape.exponent = m[var];
    }
  }
  int linear_count = static_cast<int>(std::count(linear.begin(), linear.end(), true));
  if (linear_count == n) {
    shape.power_var = n - 1;
    shape.exponent = 1;
    return shape;
  }
  if (linear_count != n - 1 || powers != 1) {
    throw ShapeError("trace ideal is not of the form (x_1, ..., x_{n-1}, x_n^c)");
  }
  return shape;
}

Ideal candidate(const RingPtr& ring, int power_var, int exponent) {
  std::vector<Polynomial> gens;
  for (int v = 0; v < ring->nvars(); ++v) {
    gens.push_back(Polynomial::variable(ring, v, v == power_var ? exponent : 1));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Classification classify_ulrich_set(const RingPresentation& R, bool use_seeds, bool check_beyond) {
  Ideal trace = trace_ideal(R);
  TraceShape shape = detect_shape(trace);
  Classification out{trace, shape.exponent, {}, std::nullopt};
  auto certify = [&](int i) {
    ReductionSearchPolicy policy;
    if (use_seeds) {
      if (auto seed = published_reduction(R.tag, i)) policy.seeds.push_back(*seed);
    }
    return ulrich_check(R.quotient, candidate(R.ring(), shape.power_var, i), policy, trace);
  };
  for (int i = 1; i <= shape.exponent; ++i) out.certificates.push_back(certify(i));
  if (check_beyond) out.beyond = certify(shape.exponent + 1);
  return out;
}

namespace {

std::string ypow(int e) { return e == 1 ? "y" : "y^" + std::to_string(e); }

std::vector<std::string> chain_ideal(int j) { return {"x", ypow(j), "z"}; }

}  // namespace

std::vector<std::vector<std::string>> rdp_ulrich_list(const FamilyTag& tag) {
  std::vector<std::vector<std::string>> out;
  auto chain = [&](int upto) {
    for (int j = 1; j <= upto; ++j) out.push_back(chain_ideal(j));
  };
  switch (tag.family) {
    case Family::RdpA:
      chain((tag.params[0] + 1) / 2);
      break;
    case Family::RdpD: {
      int n = tag.params[0];
      int m = n / 2;
      if (n % 2 == 0) {
        chain(m - 1);
        out.push_back({"x + i*" + ypow(m - 1), ypow(m), "z"});
        out.push_back({"x - i*" + ypow(m - 1), ypow(m), "z"});
      } else {
        chain(m);
      }
      out.push_back({"x^2", "y", "z"});
      break;
    }
    case Family::RdpE6:
    case Family::RdpE8:
      chain(2);
      break;
    case Family::RdpE7:
      chain(3);
      break;
    default:
      throw UnsupportedType(tag.to_string() + " is not a rational double point");
  }
  return out;
}

std::vector<std::string> rdp_next_ideal(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::RdpA:
      return chain_ideal((tag.params[0] + 1) / 2 + 1);
    case Family::RdpD: {
      int n = tag.params[0];
      return chain_ideal(n % 2 == 0 ? n / 2 : n / 2 + 1);
    }
    case Family::RdpE6:
    case Family::RdpE8:
      return chain_ideal(3);
    case Family::RdpE7:
      return chain_ideal(4);
    default:
      throw UnsupportedType(tag.to_string() + " is not a rational double point");
  }
}

RdpVerification verify_rdp_list(const FamilyTag& tag, bool check_next) {
  if (!tag.is_rdp()) throw UnsupportedType(tag.to_string() + " is not a rational double point");
  if (tag.family == Family::RdpA || tag.family == Family::RdpD) {
    if (tag.params[0] > 8) throw OutOfRange(tag.to_string() + ": RDP verification is limited to n <= 8");
  }
  RingPresentation R = instantiate(tag);
  ReductionSearchPolicy policy;
  RdpVerification out;
  for (const auto& gens : rdp_ulrich_list(tag)) {
    out.listed.push_back(ulrich_check(R.quotient, R.quotient.parse_ideal(gens), policy));
  }
  if (check_next) out.next = ulrich_check(R.quotient, R.quotient.parse_ideal(rdp_next_ideal(tag)), policy);
  return out;
}

SocleReport gorenstein_quotient_experiment(const RingPresentation& R) {
  Ideal trace = trace_ideal(R);
  SocleReport out;
  out.residue = local_length(R.quotient, trace);
  Ideal colon = ideal_colon(R.quotient.lift(trace), R.quotient.maximal());
  std::uint64_t wider = local_length(R.quotient, colon);
  if (wider > out.residue) throw InvariantViolation("tr : m is smaller than tr");
  out.socle_dim = out.residue - wider;
  out.gorenstein = out.socle_dim == 1;
  return out;
}

std::uint64_t ring_multiplicity(const RingPresentation& R, const ReductionSearchPolicy& policy) {
  auto q = find_reduction(R.quotient, R.quotient.maximal(), policy);
  if (!q) throw SearchFailure(R.tag.to_string() + ": no reduction of m found");
  return local_length(R.quotient, *q);
}

}  // namespace ulrich
