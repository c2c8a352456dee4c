#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace qfano {

// Terminal cyclic quotient point of type 1/r(1,-1,b), with 1 <= b <= r/2.
struct BasketPoint {
  int r = 2;
  int b = 1;
  auto operator<=>(const BasketPoint&) const = default;
};

inline BasketPoint make_point(int r, int b) {
  if (r < 2 || b < 1 || b >= r)
    throw Error(Errc::Range, "point (" + std::to_string(r) + "," + std::to_string(b) + ") out of range");
  if (std::gcd(r, b) != 1)
    throw Error(Errc::InvalidPoint, "gcd(" + std::to_string(r) + "," + std::to_string(b) + ") != 1");
  return BasketPoint{r, std::min(b, r - b)};
}

inline Rational point_weight(const BasketPoint& p) { return frac(p.r) - frac(1, p.r); }

struct Basket {
  std::vector<BasketPoint> points;  // sorted by (r,b)

  Basket() = default;
  explicit Basket(std::vector<BasketPoint> pts) : points(std::move(pts)) {
    for (auto& p : points) p = make_point(p.r, p.b);
    std::sort(points.begin(), points.end());
  }

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  auto begin() const { return points.begin(); }
  auto end() const { return points.end(); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (const auto& p : points) out.push_back(p.r);
    return out;
  }

  auto operator<=>(const Basket&) const = default;
};

inline Rational weight(const Basket& basket) {
  Rational w = 0;
  for (const auto& p : basket) w += point_weight(p);
  return w;
}

// -K.c2 = 24 - sum (r - 1/r)
inline Rational kc2(const Basket& basket) { return Rational(24) - weight(basket); }

inline std::int64_t gorenstein_index(const Basket& basket) {
  std::int64_t l = 1;
  for (const auto& p : basket) l = std::lcm(l, static_cast<std::int64_t>(p.r));
  return l;
}

// "3:1+4:1+5:2+7:3"; the empty basket renders as "".
inline std::string to_string(const Basket& basket) {
  std::string out;
  for (const auto& p : basket) {
    if (!out.empty()) out += '+';
    out += std::to_string(p.r) + ':' + std::to_string(p.b);
  }
  return out;
}

// "(3, 4, 5, 7)" with repeated indices written as powers: "(2^2, 3, 4, 7)".
inline std::string index_string(const Basket& basket) {
  std::string out = "(";
  const auto& pts = basket.points;
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i;
    while (j < pts.size() && pts[j].r == pts[i].r) ++j;
    if (i) out += ", ";
    out += std::to_string(pts[i].r);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "bad integer '" + s + "'");
  }
  if (pos != s.size()) throw Error(Errc::Parse, "bad integer '" + s + "'");
  return v;
}

inline Basket parse_basket(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "{}" || s == "()") return Basket{};
  std::vector<BasketPoint> pts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "expected r:b, got '" + item + "'");
    pts.push_back(make_point(parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))));
  }
  if (s.back() == '+') throw Error(Errc::Parse, "trailing '+' in basket");
  return Basket(std::move(pts));
}

// All canonical points with r - 1/r <= max_weight, sorted by (r,b).
inline std::vector<BasketPoint> admissible_points(const Rational& max_weight) {
  std::vector<BasketPoint> out;
  for (int r = 2; frac(r) - frac(1, r) <= max_weight; ++r)
    for (int b = 1; 2 * b <= r; ++b)
      if (std::gcd(r, b) == 1) out.push_back(BasketPoint{r, b});
  return out;
}

namespace detail {

inline void basket_dfs(const std::vector<BasketPoint>& pts, const std::vector<Rational>& wts,
                       std::size_t from, const Rational& left, std::vector<BasketPoint>& cur,
                       const std::function<void(const Basket&)>& emit) {
  for (std::size_t j = from; j < pts.size(); ++j) {
    if (wts[j] > left) continue;
    cur.push_back(pts[j]);
    Basket b;
    b.points = cur;
    emit(b);
    basket_dfs(pts, wts, j, left - wts[j], cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// Number of disjoint sub-streams: partition 0 is the empty basket, partition
// i+1 holds the baskets whose smallest point is admissible_points()[i].
inline std::size_t basket_partition_count(const Rational& max_weight) {
  return admissible_points(max_weight).size() + 1;
}

inline void for_each_basket_in_partition(const Rational& max_weight, std::size_t part,
                                         const std::function<void(const Basket&)>& emit) {
  if (part == 0) {
    emit(Basket{});
    return;
  }
  auto pts = admissible_points(max_weight);
  std::vector<Rational> wts;
  for (const auto& p : pts) wts.push_back(point_weight(p));
  std::size_t i = part - 1;
  if (i >= pts.size()) return;
  std::vector<BasketPoint> cur{pts[i]};
  Basket first;
  first.points = cur;
  emit(first);
  detail::basket_dfs(pts, wts, i, max_weight - wts[i], cur, emit);
}

// Lexicographic order on the sorted point list, prefixes first.
inline void for_each_basket(const Rational& max_weight, const std::function<void(const Basket&)>& emit) {
  std::size_t n = basket_partition_count(max_weight);
  for (std::size_t part = 0; part < n; ++part) for_each_basket_in_partition(max_weight, part, emit);
}

inline std::vector<Basket> enumerate_baskets(const Rational& max_weight = 24) {
  std::vector<Basket> out;
  for_each_basket(max_weight, [&](const Basket& b) { out.push_back(b); });
  return out;
}

}  // namespace qfano
