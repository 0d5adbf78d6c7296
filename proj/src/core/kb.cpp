#include "core/kb.hpp"

#include <algorithm>
#include <cassert>

namespace priorepair {

std::optional<std::int64_t> parse_integer_token(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return std::nullopt;
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (tok[j] < '0' || tok[j] > '9') return std::nullopt;
  }
  // Reject values outside int64 instead of wrapping.
  std::int64_t v = 0;
  bool neg = i == 1;
  for (std::size_t j = i; j < tok.size(); ++j) {
    int d = tok[j] - '0';
    if (v > (INT64_MAX - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  if (neg) {
    if (tok.size() - 1 > 19) return std::nullopt;
    // -INT64_MIN overflows; handle via unsigned-style check.
    if (v == INT64_MAX && tok == "-9223372036854775808") return INT64_MIN;
    return -v;
  }
  return v;
}

bool token_less(const std::string& a, const std::string& b) {
  auto na = parse_integer_token(a);
  auto nb = parse_integer_token(b);
  if (na.has_value() != nb.has_value()) return na.has_value();
  if (na && nb && *na != *nb) return *na < *nb;
  return a < b;
}

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

FactIndex Dataset::add(std::string id, Fact fact) {
  assert(!find_id(id) && !find_fact(fact));
  FactIndex idx = size();
  id_to_index_.emplace(id, idx);
  fact_to_index_.emplace(fact, idx);
  by_pred_[fact.pred].push_back(idx);
  ids_.push_back(std::move(id));
  facts_.push_back(std::move(fact));
  return idx;
}

std::optional<FactIndex> Dataset::find_id(const std::string& id) const {
  auto it = id_to_index_.find(id);
  if (it == id_to_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FactIndex> Dataset::find_fact(const Fact& fact) const {
  auto it = fact_to_index_.find(fact);
  if (it == fact_to_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Dataset::arity_of(const std::string& pred) const {
  auto it = by_pred_.find(pred);
  if (it == by_pred_.end() || it->second.empty()) return std::nullopt;
  return facts_[it->second.front()].args.size();
}

const std::vector<FactIndex>& Dataset::of_pred(const std::string& pred) const {
  static const std::vector<FactIndex> kEmpty;
  auto it = by_pred_.find(pred);
  return it == by_pred_.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------
// MetaDatabase
// ---------------------------------------------------------------------------

MetaDatabase::Signature MetaDatabase::signature_for(const MetaFact& fact) {
  Signature sig;
  sig.arity = fact.args.size();
  sig.id_positions.reserve(fact.args.size());
  for (const MetaValue& v : fact.args) sig.id_positions.push_back(v.kind == MetaValue::Kind::Ref);
  return sig;
}

bool MetaDatabase::add(MetaFact fact) {
  assert([&] {
    const Signature* sig = signature_of(fact.pred);
    if (!sig) return true;
    Signature got = signature_for(fact);
    return got.arity == sig->arity && got.id_positions == sig->id_positions;
  }());
  if (!dedup_.insert(fact).second) return false;
  if (!signatures_.count(fact.pred)) signatures_.emplace(fact.pred, signature_for(fact));
  by_pred_[fact.pred].push_back(static_cast<std::uint32_t>(facts_.size()));
  facts_.push_back(std::move(fact));
  return true;
}

const MetaDatabase::Signature* MetaDatabase::signature_of(const std::string& pred) const {
  auto it = signatures_.find(pred);
  return it == signatures_.end() ? nullptr : &it->second;
}

const std::vector<std::uint32_t>& MetaDatabase::of_pred(const std::string& pred) const {
  static const std::vector<std::uint32_t> kEmpty;
  auto it = by_pred_.find(pred);
  return it == by_pred_.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------
// TaxonomyClosure
// ---------------------------------------------------------------------------

TaxonomyClosure::TaxonomyClosure(const Taxonomy& tax, const Dataset& data) {
  for (const auto& kv : data.by_pred()) pred_set_.insert(kv.first);
  for (const auto& [sub, sup] : tax.edges) {
    pred_set_.insert(sub);
    pred_set_.insert(sup);
    if (sub != sup) strict_.insert({sub, sup});
  }
  preds_.assign(pred_set_.begin(), pred_set_.end());
  // Transitive closure; taxonomies are small.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> next;
    for (const auto& [a, b] : strict_) {
      for (const auto& [c, d] : strict_) {
        if (b == c && a != d && !strict_.count({a, d})) next.emplace_back(a, d);
      }
    }
    for (auto& p : next) changed |= strict_.insert(std::move(p)).second;
  }
}

bool TaxonomyClosure::holds(const std::string& sub, const std::string& sup) const {
  if (sub == sup) return pred_set_.count(sub) > 0;
  return strict_.count({sub, sup}) > 0;
}

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

bool pairs_acyclic(const std::vector<std::pair<FactIndex, FactIndex>>& pairs) {
  std::map<FactIndex, std::vector<FactIndex>> adj;
  std::set<FactIndex> nodes;
  for (auto& [a, b] : pairs) {
    adj[a].push_back(b);
    nodes.insert(a);
    nodes.insert(b);
  }
  std::map<FactIndex, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<FactIndex, std::size_t>> stack;
  for (FactIndex root : nodes) {
    if (state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      auto& out = adj[n];
      if (i == out.size()) {
        state[n] = 2;
        stack.pop_back();
        continue;
      }
      FactIndex m = out[i++];
      if (state[m] == 1) return false;
      if (state[m] == 0) {
        state[m] = 1;
        stack.push_back({m, 0});
      }
    }
  }
  return true;
}

std::set<std::pair<FactIndex, FactIndex>> conflicting_pairs(const std::vector<Conflict>& conflicts) {
  std::set<std::pair<FactIndex, FactIndex>> out;
  for (const Conflict& c : conflicts) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) out.insert({c[i], c[j]});
    }
  }
  return out;
}

}  // namespace priorepair
