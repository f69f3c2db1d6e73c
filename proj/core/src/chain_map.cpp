#include "chainpaths/chain_map.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <json.hpp>

#include "chainpaths/errors.hpp"

namespace chainpaths {

namespace {

constexpr std::array<std::pair<ClassId, std::string_view>, 7> kClassNames{{
    {ClassId::pc, "pc"},
    {ClassId::c, "c"},
    {ClassId::po, "po"},
    {ClassId::o, "o"},
    {ClassId::del, "del"},
    {ClassId::q, "q"},
    {ClassId::qp, "qp"},
}};

std::string pair_text(const MapPair& p) {
  return "(" + std::to_string(p.point) + "," + std::to_string(p.image) + ")";
}

}  // namespace

std::string_view class_name(ClassId id) noexcept {
  for (const auto& [cid, name] : kClassNames) {
    if (cid == id) return name;
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view name) noexcept {
  for (const auto& [cid, cname] : kClassNames) {
    if (cname == name) return cid;
  }
  return std::nullopt;
}

ChainMap ChainMap::make(int dom_size, int cod_size, std::vector<MapPair> pairs) {
  if (dom_size < 0) {
    throw Error(ErrorCode::invalid_size, "dom_size must be nonnegative, got " + std::to_string(dom_size));
  }
  if (cod_size != dom_size && cod_size != dom_size + 1) {
    throw Error(ErrorCode::invalid_size, "cod_size must be " + std::to_string(dom_size) + " or " +
                                             std::to_string(dom_size + 1) + ", got " +
                                             std::to_string(cod_size));
  }
  for (const auto& p : pairs) {
    if (p.point < 0 || p.point >= dom_size || p.image < 0 || p.image >= cod_size) {
      throw Error(ErrorCode::point_out_of_range, "pair " + pair_text(p) + " outside {0.." +
                                                     std::to_string(dom_size - 1) + "} -> {0.." +
                                                     std::to_string(cod_size - 1) + "}");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].point == pairs[i - 1].point) {
      throw Error(ErrorCode::duplicate_domain_point, "point " + std::to_string(pairs[i].point) +
                                                         " appears more than once");
    }
    if (pairs[i].image < pairs[i - 1].image) {
      throw Error(ErrorCode::non_monotone_image,
                  pair_text(pairs[i - 1]) + " then " + pair_text(pairs[i]) + " is not order-preserving");
    }
  }
  return ChainMap(dom_size, cod_size, std::move(pairs));
}

ChainMap ChainMap::empty(int dom_size, int cod_size) { return make(dom_size, cod_size, {}); }

ChainMap ChainMap::identity(int n) {
  std::vector<MapPair> pairs;
  pairs.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int x = 0; x < n; ++x) pairs.push_back({x, x});
  return make(n, n, std::move(pairs));
}

bool ChainMap::in_domain(int x) const noexcept { return apply(x).has_value(); }

std::optional<int> ChainMap::apply(int x) const noexcept {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const MapPair& p, int v) { return p.point < v; });
  if (it == pairs_.end() || it->point != x) return std::nullopt;
  return it->image;
}

ChainMap ChainMap::with_codomain(int cod_size) const { return make(dom_size_, cod_size, pairs_); }

bool is_decreasing(const ChainMap& m) noexcept {
  return std::all_of(m.pairs().begin(), m.pairs().end(),
                     [](const MapPair& p) { return p.image <= p.point; });
}

bool is_full(const ChainMap& m) noexcept { return static_cast<int>(m.size()) == m.dom_size(); }

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  if (f.cod_size() != g.dom_size()) {
    throw Error(ErrorCode::size_mismatch, "cannot compose a map into " + std::to_string(f.cod_size()) +
                                              " points with a map on " + std::to_string(g.dom_size()) +
                                              " points");
  }
  // Dense lookup for g; -1 marks points outside Dom g.
  std::vector<int> g_at(static_cast<std::size_t>(g.dom_size()), -1);
  for (const auto& p : g.pairs()) g_at[static_cast<std::size_t>(p.point)] = p.image;

  std::vector<MapPair> out;
  out.reserve(f.size());
  for (const auto& p : f.pairs()) {
    int image = g_at[static_cast<std::size_t>(p.image)];
    if (image >= 0) out.push_back({p.point, image});
  }
  return ChainMap::make(f.dom_size(), g.cod_size(), std::move(out));
}

bool is_idempotent(const ChainMap& m) {
  if (m.cod_size() != m.dom_size()) {
    throw Error(ErrorCode::size_mismatch, "idempotency needs cod_size == dom_size");
  }
  return compose(m, m) == m;
}

bool belongs_to(const ChainMap& m, ClassId c) noexcept {
  const bool square = m.cod_size() == m.dom_size();
  switch (c) {
    case ClassId::pc: return square && is_decreasing(m);
    case ClassId::c: return square && is_decreasing(m) && is_full(m);
    case ClassId::po: return square;
    case ClassId::o: return square && is_full(m);
    case ClassId::del: return m.cod_size() == m.dom_size() + 1;
    case ClassId::q: return square && is_decreasing(m) && m.in_domain(0);
    case ClassId::qp: return square && is_decreasing(m) && !m.in_domain(0);
  }
  return false;
}

MapStats stats(const ChainMap& m) noexcept {
  MapStats s;
  s.dom_card = static_cast<int>(m.size());
  const auto pairs = m.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0 || pairs[i].image != pairs[i - 1].image) ++s.im_card;
  }
  if (!pairs.empty()) s.max_im = pairs.back().image;
  return s;
}

ChainMap phi_q(const ChainMap& m) {
  if (!belongs_to(m, ClassId::q)) {
    throw Error(ErrorCode::not_in_class, to_display(m) + " is not in Q");
  }
  std::vector<MapPair> rest(m.pairs().begin() + 1, m.pairs().end());
  return ChainMap::make(m.dom_size(), m.cod_size(), std::move(rest));
}

ChainMap phi_q_inv(const ChainMap& m) {
  if (!belongs_to(m, ClassId::qp)) {
    throw Error(ErrorCode::not_in_class, to_display(m) + " is not in QP");
  }
  std::vector<MapPair> pairs;
  pairs.reserve(m.size() + 1);
  pairs.push_back({0, 0});
  pairs.insert(pairs.end(), m.pairs().begin(), m.pairs().end());
  return ChainMap::make(m.dom_size(), m.cod_size(), std::move(pairs));
}

std::string to_json_text(const ChainMap& m) {
  nlohmann::ordered_json doc;
  doc["n"] = m.dom_size();
  doc["m"] = m.cod_size();
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : m.pairs()) pairs.push_back({p.point, p.image});
  doc["map"] = std::move(pairs);
  return doc.dump();
}

ChainMap parse_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("map text is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("map")) {
    throw Error(ErrorCode::parse_error, "map object needs \"n\" and \"map\" keys");
  }
  const auto& n = doc["n"];
  if (!n.is_number_integer()) throw Error(ErrorCode::parse_error, "\"n\" must be an integer");
  int dom_size = n.get<int>();
  int cod_size = dom_size;
  if (doc.contains("m")) {
    if (!doc["m"].is_number_integer()) throw Error(ErrorCode::parse_error, "\"m\" must be an integer");
    cod_size = doc["m"].get<int>();
  }
  const auto& map = doc["map"];
  if (!map.is_array()) throw Error(ErrorCode::parse_error, "\"map\" must be an array of [a,b] pairs");
  std::vector<MapPair> pairs;
  for (const auto& entry : map) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw Error(ErrorCode::parse_error, "map entry " + entry.dump() + " is not an [a,b] integer pair");
    }
    pairs.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  return ChainMap::make(dom_size, cod_size, std::move(pairs));
}

std::string to_display(const ChainMap& m) {
  std::string top;
  std::string bottom;
  for (const auto& p : m.pairs()) {
    if (!top.empty()) {
      top += ' ';
      bottom += ' ';
    }
    top += std::to_string(p.point);
    bottom += std::to_string(p.image);
  }
  return "(" + top + " / " + bottom + ")";
}

}  // namespace chainpaths
