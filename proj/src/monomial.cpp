#include "psi/monomial.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace psi {

std::string VarIndex::name() const {
  if (kind == Kind::Alpha)
    return "a[" + std::to_string(first) + "," + std::to_string(second) + "]";
  return "phi[" + std::to_string(first) + "," + std::to_string(second) + "]";
}

VarIndex VarIndex::parse(const std::string& text) {
  static const std::regex re(R"(^(a|phi)\[(\d+),(\d+)\]$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw std::invalid_argument("not a variable name: " + text);
  int x = std::stoi(m[2]), y = std::stoi(m[3]);
  return m[1] == "a" ? alpha(x, y) : phi(x, y);
}

bool Monomial::divides(const Monomial& o) const {
  if (total_ > o.total_)
    return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > o.exps_[k])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = static_cast<Exponent>(r.exps_[k] + o.exps_[k]);
  for (std::size_t b = 0; b < mdeg_.size(); ++b)
    r.mdeg_[b] = static_cast<Exponent>(r.mdeg_[b] + o.mdeg_[b]);
  r.total_ += o.total_;
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    r.exps_[k] = static_cast<Exponent>(r.exps_[k] - d.exps_[k]);
  for (std::size_t b = 0; b < mdeg_.size(); ++b)
    r.mdeg_[b] = static_cast<Exponent>(r.mdeg_[b] - d.mdeg_[b]);
  r.total_ -= d.total_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] != 0 && o.exps_[k] != 0)
      return false;
  return true;
}

bool Monomial::cache_consistent(std::span<const int> block_of) const {
  std::vector<Exponent> md(mdeg_.size(), 0);
  int total = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    md[static_cast<std::size_t>(block_of[k])] =
        static_cast<Exponent>(md[static_cast<std::size_t>(block_of[k])] + exps_[k]);
    total += exps_[k];
  }
  return md == mdeg_ && total == total_;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<int> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k))
      throw std::invalid_argument("variable priority must be a permutation");
}

MonomialOrder MonomialOrder::standard(Kind kind, std::size_t num_vars) {
  std::vector<int> p(num_vars);
  for (std::size_t k = 0; k < num_vars; ++k)
    p[k] = static_cast<int>(k);
  return MonomialOrder(kind, std::move(p));
}

namespace {

Cmp grevlex_tail(const Monomial& a, const Monomial& b, std::span<const int> prio) {
  for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
    auto k = static_cast<std::size_t>(*it);
    if (a[k] != b[k])
      return a[k] < b[k] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

}  // namespace

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GrevLex:
      if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree() ? Cmp::LT : Cmp::GT;
      return grevlex_tail(a, b, priority_);
    case Kind::Lex:
      for (int v : priority_) {
        auto k = static_cast<std::size_t>(v);
        if (a[k] != b[k])
          return a[k] < b[k] ? Cmp::LT : Cmp::GT;
      }
      return Cmp::EQ;
    case Kind::BlockGrevLex: {
      auto da = a.multidegree(), db = b.multidegree();
      for (std::size_t i = 0; i < da.size(); ++i)
        if (da[i] != db[i])
          return da[i] < db[i] ? Cmp::LT : Cmp::GT;
      return grevlex_tail(a, b, priority_);
    }
  }
  return Cmp::EQ;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::BlockGrevLex:
      return "block-grevlex";
  }
  return "?";
}

MonomialOrder::Kind MonomialOrder::parse_kind(const std::string& s) {
  if (s == "grevlex")
    return Kind::GrevLex;
  if (s == "lex")
    return Kind::Lex;
  if (s == "block-grevlex")
    return Kind::BlockGrevLex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

Ring::Ring(std::vector<VarIndex> vars, int num_blocks, MonomialOrder order)
    : vars_(std::move(vars)), nblocks_(num_blocks), order_(std::move(order)) {
  if (order_.priority().size() != vars_.size())
    throw std::invalid_argument("monomial order does not match variable count");
  block_size_.assign(static_cast<std::size_t>(nblocks_), 0);
  for (const auto& v : vars_) {
    int b = v.block() - 1;
    if (b < 0 || b >= nblocks_)
      throw std::invalid_argument("variable " + v.name() + " outside block range");
    block_of_.push_back(b);
    ++block_size_[static_cast<std::size_t>(b)];
  }
}

int Ring::index_of(const VarIndex& v) const {
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k] == v)
      return static_cast<int>(k);
  return -1;
}

Monomial Ring::one() const {
  Monomial m;
  m.exps_.assign(vars_.size(), 0);
  m.mdeg_.assign(static_cast<std::size_t>(nblocks_), 0);
  return m;
}

Monomial Ring::variable(std::size_t k, Exponent e) const {
  Monomial m = one();
  m.exps_[k] = e;
  m.mdeg_[static_cast<std::size_t>(block_of_[k])] = e;
  m.total_ = e;
  return m;
}

Monomial Ring::monomial(std::vector<Exponent> exps) const {
  if (exps.size() != vars_.size())
    throw std::invalid_argument("exponent vector has wrong length");
  Monomial m = one();
  m.exps_ = std::move(exps);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto b = static_cast<std::size_t>(block_of_[k]);
    m.mdeg_[b] = static_cast<Exponent>(m.mdeg_[b] + m.exps_[k]);
    m.total_ += m.exps_[k];
  }
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  std::vector<Exponent> e(vars_.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    e[k] = std::max(a[k], b[k]);
  return monomial(std::move(e));
}

std::string Ring::to_string(const Monomial& m) const {
  if (m.is_one())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (m[k] == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += vars_[k].name();
    if (m[k] > 1)
      s += "^" + std::to_string(m[k]);
  }
  return s;
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return std::make_shared<Ring>(vars_, nblocks_, std::move(order));
}

}  // namespace psi
