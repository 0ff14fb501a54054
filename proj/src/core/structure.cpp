#include "core/structure.hpp"

#include <algorithm>
#include <set>

#include "core/axioms.hpp"

namespace tgs {

using nlohmann::json;

Structure::Structure(const Structure& other)
    : labels_(other.labels_),
      zero_(other.zero_),
      plus_(other.plus_),
      ternary_(other.ternary_),
      gamma_labels_(other.gamma_labels_),
      gamma_(other.gamma_),
      down_(other.down_),
      description_(other.description_),
      validity_(other.validity_.load()) {}

Structure& Structure::operator=(const Structure& other) {
  if (this == &other) return *this;
  labels_ = other.labels_;
  zero_ = other.zero_;
  plus_ = other.plus_;
  ternary_ = other.ternary_;
  gamma_labels_ = other.gamma_labels_;
  gamma_ = other.gamma_;
  down_ = other.down_;
  description_ = other.description_;
  validity_.store(other.validity_.load());
  return *this;
}

std::optional<Elem> Structure::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return Elem(i);
  return std::nullopt;
}

std::optional<std::size_t> Structure::find_gamma(const std::string& label) const {
  for (std::size_t i = 0; i < gamma_labels_.size(); ++i)
    if (gamma_labels_[i] == label) return i;
  return std::nullopt;
}

Elem Structure::require(const std::string& label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorKind::NotFound, "unknown element label '" + label + "'");
}

std::size_t Structure::require_gamma(const std::string& label) const {
  if (auto g = find_gamma(label)) return *g;
  throw Error(ErrorKind::NotFound, "unknown gamma label '" + label + "'");
}

void Structure::finish() {
  const std::size_t m = labels_.size();
  if (m == 0) throw Error(ErrorKind::Parse, "carrier is empty");
  if (m > kCarrierLimit)
    throw Error(ErrorKind::Parse, "carrier exceeds the representation limit of 64 elements");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != m)
    throw Error(ErrorKind::Parse, "element labels are not unique");
  if (gamma_labels_.empty())
    throw Error(ErrorKind::Parse, "gamma must list at least one action");
  std::set<std::string> gseen(gamma_labels_.begin(), gamma_labels_.end());
  if (gseen.size() != gamma_labels_.size())
    throw Error(ErrorKind::Parse, "gamma labels are not unique");
  if (plus_.size() != m * m || ternary_.size() != m * m * m ||
      gamma_.size() != gamma_labels_.size() * m)
    throw Error(ErrorKind::Internal, "operation tables have inconsistent sizes");
  for (Elem v : plus_)
    if (v >= m) throw Error(ErrorKind::Parse, "plus table entry out of range");
  for (Elem v : ternary_)
    if (v >= m) throw Error(ErrorKind::Parse, "ternary table entry out of range");
  for (Elem v : gamma_)
    if (v >= m) throw Error(ErrorKind::Parse, "gamma_action entry out of range");
  if (zero_ >= m) throw Error(ErrorKind::Parse, "zero is not a carrier element");

  down_.assign(m, 0);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (leq(y, x)) down_[x] |= bit(y);
}

Structure Structure::from_tables(std::vector<std::string> labels, Elem zero,
                                 std::vector<Elem> plus, std::vector<Elem> ternary,
                                 std::vector<std::string> gamma_labels,
                                 std::vector<Elem> gamma_action,
                                 std::string description) {
  Structure t;
  t.labels_ = std::move(labels);
  t.zero_ = zero;
  t.plus_ = std::move(plus);
  t.ternary_ = std::move(ternary);
  t.gamma_labels_ = std::move(gamma_labels);
  t.gamma_ = std::move(gamma_action);
  t.description_ = std::move(description);
  t.finish();
  return t;
}

namespace {

const json& need(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw Error(ErrorKind::Parse, std::string("document is missing \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& node, const char* what) {
  if (!node.is_array())
    throw Error(ErrorKind::Parse, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string())
      throw Error(ErrorKind::Parse, std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Structure Structure::from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "TGS document must be a JSON object");
  static const std::set<std::string> known = {"elements", "zero", "gamma",
                                              "plus", "ternary", "gamma_action",
                                              "description"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key()))
      throw Error(ErrorKind::Parse, "unknown document key \"" + it.key() + "\"");

  Structure t;
  t.labels_ = string_list(need(doc, "elements"), "\"elements\"");
  const std::size_t m = t.labels_.size();
  if (m == 0) throw Error(ErrorKind::Parse, "\"elements\" is empty");
  if (m > kCarrierLimit)
    throw Error(ErrorKind::Parse, "carrier exceeds the representation limit of 64 elements");

  auto index_of = [&](const json& node, const char* what) -> Elem {
    if (!node.is_string())
      throw Error(ErrorKind::Parse, std::string(what) + " must be an element label");
    const std::string s = node.get<std::string>();
    for (std::size_t i = 0; i < m; ++i)
      if (t.labels_[i] == s) return Elem(i);
    throw Error(ErrorKind::Parse, std::string("unknown element label '") + s + "' in " + what);
  };

  t.zero_ = index_of(need(doc, "zero"), "\"zero\"");
  t.gamma_labels_ = string_list(need(doc, "gamma"), "\"gamma\"");

  const json& plus = need(doc, "plus");
  if (!plus.is_array() || plus.size() != m)
    throw Error(ErrorKind::Parse, "\"plus\" must be an m x m table");
  t.plus_.reserve(m * m);
  for (const auto& row : plus) {
    if (!row.is_array() || row.size() != m)
      throw Error(ErrorKind::Parse, "\"plus\" must be an m x m table");
    for (const auto& cell : row) t.plus_.push_back(index_of(cell, "\"plus\""));
  }

  const json& tern = need(doc, "ternary");
  if (!tern.is_array() || tern.size() != m)
    throw Error(ErrorKind::Parse, "\"ternary\" must be an m x m x m table");
  t.ternary_.reserve(m * m * m);
  for (const auto& plane : tern) {
    if (!plane.is_array() || plane.size() != m)
      throw Error(ErrorKind::Parse, "\"ternary\" must be an m x m x m table");
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != m)
        throw Error(ErrorKind::Parse, "\"ternary\" must be an m x m x m table");
      for (const auto& cell : row) t.ternary_.push_back(index_of(cell, "\"ternary\""));
    }
  }

  const json& ga = need(doc, "gamma_action");
  if (!ga.is_object())
    throw Error(ErrorKind::Parse, "\"gamma_action\" must map gamma labels to rows");
  if (ga.size() != t.gamma_labels_.size())
    throw Error(ErrorKind::Parse, "\"gamma_action\" must have one row per gamma label");
  t.gamma_.reserve(t.gamma_labels_.size() * m);
  for (const auto& glabel : t.gamma_labels_) {
    auto it = ga.find(glabel);
    if (it == ga.end())
      throw Error(ErrorKind::Parse, "\"gamma_action\" is missing row for '" + glabel + "'");
    if (!it->is_array() || it->size() != m)
      throw Error(ErrorKind::Parse, "\"gamma_action\" rows must have m entries");
    for (const auto& cell : *it) t.gamma_.push_back(index_of(cell, "\"gamma_action\""));
  }

  if (auto it = doc.find("description"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorKind::Parse, "\"description\" must be a string");
    t.description_ = it->get<std::string>();
  }

  t.finish();
  return t;
}

Structure Structure::from_json_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::Parse, "document is not valid JSON");
  return from_json(doc);
}

json Structure::to_json() const {
  const std::size_t m = size();
  json doc;
  doc["elements"] = labels_;
  doc["zero"] = labels_[zero_];
  doc["gamma"] = gamma_labels_;
  json plus = json::array();
  for (Elem x = 0; x < m; ++x) {
    json row = json::array();
    for (Elem y = 0; y < m; ++y) row.push_back(labels_[this->plus(x, y)]);
    plus.push_back(std::move(row));
  }
  doc["plus"] = std::move(plus);
  json tern = json::array();
  for (Elem x = 0; x < m; ++x) {
    json plane = json::array();
    for (Elem y = 0; y < m; ++y) {
      json row = json::array();
      for (Elem z = 0; z < m; ++z) row.push_back(labels_[ternary(x, y, z)]);
      plane.push_back(std::move(row));
    }
    tern.push_back(std::move(plane));
  }
  doc["ternary"] = std::move(tern);
  json ga;
  for (std::size_t g = 0; g < gamma_labels_.size(); ++g) {
    json row = json::array();
    for (Elem x = 0; x < m; ++x) row.push_back(labels_[gamma(g, x)]);
    ga[gamma_labels_[g]] = std::move(row);
  }
  doc["gamma_action"] = std::move(ga);
  if (!description_.empty()) doc["description"] = description_;
  return doc;
}

std::string Structure::to_json_text() const { return to_json().dump(2) + "\n"; }

bool Structure::is_valid() const {
  int state = validity_.load(std::memory_order_relaxed);
  if (state == 0) {
    state = axioms_hold(*this) ? 1 : 2;
    validity_.store(state, std::memory_order_relaxed);
  }
  return state == 1;
}

std::vector<Elem> parse_labels_csv(const Structure& t, const std::string& csv) {
  std::vector<Elem> out;
  std::size_t pos = 0;
  if (csv.empty()) return out;
  while (true) {
    std::size_t end = csv.find(',', pos);
    std::string item = csv.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    // trim surrounding spaces
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    out.push_back(t.require(item));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> to_labels(const Structure& t, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (Elem x : xs) out.push_back(t.label(x));
  return out;
}

ElemMask mask_of(const std::vector<Elem>& xs) {
  ElemMask mask = 0;
  for (Elem x : xs) mask |= bit(x);
  return mask;
}

std::vector<Elem> mask_elements(ElemMask mask) {
  std::vector<Elem> out;
  for (Elem x = 0; mask; ++x, mask >>= 1)
    if (mask & 1) out.push_back(x);
  return out;
}

json mask_to_labels(const Structure& t, ElemMask mask) {
  json out = json::array();
  for (Elem x : mask_elements(mask)) out.push_back(t.label(x));
  return out;
}

ElemMask mask_from_labels(const Structure& t, const json& labels) {
  if (!labels.is_array())
    throw Error(ErrorKind::Parse, "element set must be an array of labels");
  ElemMask mask = 0;
  for (const auto& item : labels) {
    if (!item.is_string())
      throw Error(ErrorKind::Parse, "element set must contain only labels");
    mask |= bit(t.require(item.get<std::string>()));
  }
  return mask;
}

}  // namespace tgs
