#include "vwreath/oracle.hpp"

#include <set>
#include <string>
#include <vector>

#include "vwreath/error.hpp"

namespace vwreath::oracle {

namespace {

bool matches(const Word& cell, const DyadicPoint& x) {
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell.bit(i) != x.digit(i)) return false;
  }
  return true;
}

DyadicPoint replace_prefix(const DyadicPoint& x, std::size_t drop, const Word& with) {
  std::string digits = with.str();
  for (std::size_t i = drop; i < x.stem().size(); ++i) digits.push_back(static_cast<char>('0' + x.digit(i)));
  return canonicalize(Word(digits));
}

Located move(const std::vector<Word>& from, const std::vector<Word>& to, const DyadicPoint& x, int sign) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!matches(from[i], x)) continue;
    const int n = static_cast<int>(from[i].size()) - static_cast<int>(to[i].size());
    return {replace_prefix(x, from[i].size(), to[i]), sign * n};
  }
  throw PreconditionError("cells do not cover the point");
}

long nu(const DyadicPoint& x) { return -static_cast<long>(x.stem().size()); }

}  // namespace

Located forward(const VElement& v, const DyadicPoint& y) { return move(v.domain(), v.range(), y, 1); }

Located backward(const VElement& v, const DyadicPoint& x) { return move(v.range(), v.domain(), x, -1); }

int eval(const KElement& a, const DyadicPoint& x) {
  for (const auto& [p, value] : a.exceptions()) {
    if (p == x) return value;
  }
  for (std::size_t i = 0; i < a.cells().size(); ++i) {
    if (matches(a.cells()[i], x)) return a.values()[i];
  }
  throw PreconditionError("cells do not cover the point");
}

int action_eval(const VElement& v, const KElement& a, const DyadicPoint& x) {
  const Located y = backward(v, x);
  const TwistContext& ctx = *a.context();
  return ctx.twist_pow(oracle::eval(a, y.point), -y.exponent);
}

long s_exponent(const VElement& v, const DyadicPoint& x) { return backward(v, x).exponent; }

long s0_exponent(const VElement& v, const DyadicPoint& x) {
  const Located y = backward(v, x);
  return y.exponent - nu(x) + nu(y.point);
}

std::size_t inverse_limit_count(const GroupHom& beta, std::size_t depth, std::size_t window) {
  const FiniteGroup& g = *beta.source();
  std::set<std::vector<int>> seen;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    // chain[k] = beta^k(x)
    std::vector<int> chain{x};
    for (std::size_t k = 0; k < depth; ++k) chain.push_back(beta(chain.back()));
    std::vector<int> tail;
    for (std::size_t k = 0; k < window; ++k) tail.push_back(chain[depth - k]);
    seen.insert(tail);
  }
  return seen.size();
}

std::optional<Word> flip_conjugate(const VElement& v, const Word& u) {
  auto flip = [](const Word& w) {
    std::string s = w.str();
    for (char& c : s) c = c == '0' ? '1' : '0';
    return Word(s);
  };
  const Word fu = flip(u);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Word& d = v.domain()[i];
    if (d.is_prefix_of(fu)) return flip(v.range()[i] + fu.drop(d.size()));
  }
  return std::nullopt;
}

}  // namespace vwreath::oracle
