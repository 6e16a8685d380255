#include "ulrich/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ulrich/errors.hpp"

namespace ulrich {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) {
    throw PreconditionError("too many variables");
  }
  Monomial m(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) m.set(static_cast<int>(i), e[i]);
  return m;
}

void Monomial::set(int i, int value) {
  if (value < 0 || value > 0xffff) throw PreconditionError("exponent out of range");
  deg = deg - exp[i] + static_cast<std::uint32_t>(value);
  exp[i] = static_cast<std::uint16_t>(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (int i = 0; i < nvars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars; ++i) {
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars);
  for (int i = 0; i < a.nvars; ++i) {
    unsigned e = static_cast<unsigned>(a.exp[i]) + b.exp[i];
    if (e > 0xffff) throw PreconditionError("exponent overflow");
    out.exp[i] = static_cast<std::uint16_t>(e);
  }
  out.deg = a.deg + b.deg;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars);
  for (int i = 0; i < a.nvars; ++i) out.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  out.deg = a.deg - b.deg;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars);
  for (int i = 0; i < a.nvars; ++i) {
    out.exp[i] = std::max(a.exp[i], b.exp[i]);
    out.deg += out.exp[i];
  }
  return out;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  unsigned da = 0;
  unsigned db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::GrevLex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = a.nvars - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::Lex:
      for (int i = 0; i < a.nvars; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::BlockElim: {
      int c = grevlex_range(a, b, 0, split);
      if (c != 0) return c;
      return grevlex_range(a, b, split, a.nvars);
    }
  }
  return 0;
}

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
  if (names_.empty() || names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw PreconditionError("ring needs 1.." + std::to_string(kMaxVars) + " variables");
  }
  if (order_.kind == OrderKind::BlockElim && (order_.split <= 0 || order_.split >= nvars())) {
    throw PreconditionError("elimination split out of range");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw PreconditionError("duplicate variable " + names_[i]);
    }
  }
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw RingMismatch("operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
  if (index < 0 || index >= ring->nvars()) throw PreconditionError("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, power);
  return term(std::move(ring), m, Scalar(1));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, int power) {
  int index = ring->index_of(name);
  if (index < 0) throw ParseError("unknown variable '" + name + "'");
  return variable(std::move(ring), index, power);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scaled(lc().inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coef * c});
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw PreconditionError("negative power");
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::truncated_below(int bound) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (static_cast<int>(t.mono.deg) < bound) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  std::vector<int> where(ring_->nvars());
  for (int i = 0; i < ring_->nvars(); ++i) {
    where[i] = target->index_of(ring_->names()[i]);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (where[i] < 0) throw RingMismatch("variable " + ring_->names()[i] + " missing in target ring");
      m.set(where[i], t.mono.exp[i]);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (static_cast<int>(values.size()) != ring_->nvars()) {
    throw PreconditionError("substitution needs one value per variable");
  }
  RingPtr target = values.empty() ? ring_ : values[0].ring();
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial product = constant(target, t.coef);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp[i] != 0) product = product * values[i].pow(t.mono.exp[i]);
    }
    acc += product;
  }
  return acc;
}

void Polynomial::add_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
  if (c.is_zero() || g.is_zero()) return;
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Monomial bm;
  bool have_bm = false;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b != g.terms_.end() && !have_bm) {
      bm = b->mono * m;
      have_bm = true;
    }
    int cmp;
    if (a == terms_.end()) {
      cmp = -1;
    } else if (b == g.terms_.end()) {
      cmp = 1;
    } else {
      cmp = ord.compare(a->mono, bm);
    }
    if (cmp > 0) {
      out.push_back(std::move(*a));
      ++a;
    } else if (cmp < 0) {
      out.push_back({bm, b->coef * c});
      ++b;
      have_bm = false;
    } else {
      Scalar sum = a->coef + b->coef * c;
      if (!sum.is_zero()) out.push_back({bm, std::move(sum)});
      ++a;
      ++b;
      have_bm = false;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_);
  add_multiple(Scalar(1), Monomial(ring_->nvars()), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*ring_, *other.ring_);
  add_multiple(Scalar(-1), Monomial(ring_->nvars()), other);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out -= b;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  Polynomial out(a.ring_);
  for (const auto& t : small.terms_) out.add_multiple(t.coef, t.mono, big);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

namespace {

std::string render_monomial(const Ring& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names()[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(*ring_, t.mono);
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  RingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = signed_product();
    while (true) {
      if (eat('+')) {
        acc += signed_product();
      } else if (eat('-')) {
        acc -= signed_product();
      } else {
        return acc;
      }
    }
  }

  Polynomial signed_product() {
    if (eat('-')) return -product();
    eat('+');
    return product();
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.lc().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      if (pos_ - start > 4) fail("exponent too large");
      base = base.pow(std::stoi(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("operand expected");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("')' expected");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(text_.substr(start, pos_ - start));
      return Polynomial::constant(ring_, Scalar(mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      int index = ring_->index_of(name);
      if (index >= 0) return Polynomial::variable(ring_, index);
      if (name == "i") return Polynomial::constant(ring_, Scalar::imaginary_unit());
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
  return Parser(std::move(ring), text).run();
}

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

namespace {

int find_divisor(const Monomial& m, const std::vector<Polynomial>& divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].lm().divides(m)) return static_cast<int>(i);
  }
  return -1;
}

void check_divisors(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  for (const auto& d : divisors) {
    require_same_ring(*p.ring(), *d.ring());
    if (d.is_zero()) throw PreconditionError("zero divisor polynomial");
  }
}

}  // namespace

Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  check_divisors(p, divisors);
  const RingPtr& ring = p.ring();
  Division out{std::vector<Polynomial>(divisors.size(), Polynomial(ring)), Polynomial(ring)};
  std::vector<Term> rem;
  Polynomial work = p;
  while (!work.is_zero()) {
    Term lead = work.lead();
    int k = find_divisor(lead.mono, divisors);
    if (k < 0) {
      rem.push_back(lead);
      work -= Polynomial::term(ring, lead.mono, lead.coef);
      continue;
    }
    Monomial u = lead.mono / divisors[k].lm();
    Scalar c = lead.coef / divisors[k].lc();
    out.quotients[k] += Polynomial::term(ring, u, c);
    work.add_multiple(-c, u, divisors[k]);
  }
  out.remainder = Polynomial::from_terms(ring, std::move(rem));
  return out;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  check_divisors(p, divisors);
  const RingPtr& ring = p.ring();
  Polynomial work = p;
  Polynomial rem(ring);
  // Terms that survive are strictly decreasing, so appending keeps order.
  while (!work.is_zero()) {
    const Term& lead = work.terms_.front();
    int k = find_divisor(lead.mono, divisors);
    if (k < 0) {
      rem.terms_.push_back(lead);
      work.terms_.erase(work.terms_.begin());
      continue;
    }
    Monomial u = lead.mono / divisors[k].lm();
    Scalar c = -(lead.coef / divisors[k].lc());
    work.add_multiple(c, u, divisors[k]);
  }
  return rem;
}

}  // namespace ulrich
