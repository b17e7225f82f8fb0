#include "cov/program.hpp"

#include <algorithm>
#include <sstream>

namespace cov {

int ProgramArena::intern(Node nd, const std::string& key) {
  auto it = dedup_.find(key);
  if (it != dedup_.end()) return it->second;
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(nd));
  dedup_.emplace(key, idx);
  return idx;
}

int ProgramArena::transvect(int left, int right, int index) {
  const Node& l = nodes_.at(left);
  const Node& r = nodes_.at(right);
  if (index < 0 || index > std::min(l.order, r.order))
    throw std::invalid_argument("transvectant index exceeds operand orders");
  Node nd{Transvect{left, right, index}, l.degree + r.degree,
          l.order + r.order - 2 * index};
  std::string key =
      "t" + std::to_string(left) + "," + std::to_string(right) + "," +
      std::to_string(index);
  return intern(std::move(nd), key);
}

int ProgramArena::product(std::vector<std::pair<int, int>> factors) {
  std::erase_if(factors, [](const auto& f) { return f.second == 0; });
  std::sort(factors.begin(), factors.end());
  // merge repeated bases
  std::vector<std::pair<int, int>> merged;
  for (const auto& f : factors) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  if (merged.size() == 1 && merged[0].second == 1) return merged[0].first;
  int d = 0, m = 0;
  std::string key = "p";
  for (const auto& [child, e] : merged) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    d += nodes_.at(child).degree * e;
    m += nodes_.at(child).order * e;
    key += std::to_string(child) + "^" + std::to_string(e) + ",";
  }
  return intern(Node{Product{std::move(merged)}, d, m}, key);
}

int ProgramArena::sum(std::vector<int> terms) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  std::sort(terms.begin(), terms.end());
  const Node& first = nodes_.at(terms.front());
  for (int t : terms) {
    if (nodes_.at(t).degree != first.degree ||
        nodes_.at(t).order != first.order)
      throw std::invalid_argument("sum terms must share bidegree");
  }
  if (terms.size() == 1) return terms.front();
  std::string key = "s";
  for (int t : terms) key += std::to_string(t) + ",";
  return intern(Node{Sum{std::move(terms)}, first.degree, first.order}, key);
}

std::string ProgramArena::to_string(
    int root, const std::unordered_map<int, std::string>& names) const {
  auto it = names.find(root);
  if (it != names.end()) return it->second;
  const Node& nd = nodes_.at(root);
  std::ostringstream os;
  if (std::holds_alternative<Leaf>(nd.op)) {
    os << "f";
  } else if (auto* t = std::get_if<Transvect>(&nd.op)) {
    os << "tr(" << to_string(t->left, names) << ", "
       << to_string(t->right, names) << ", " << t->index << ")";
  } else if (auto* p = std::get_if<Product>(&nd.op)) {
    std::string inner;
    std::vector<std::string> parts;
    for (const auto& [child, e] : p->factors) {
      std::string s = to_string(child, names);
      if (e > 1) s = "pow(" + s + ", " + std::to_string(e) + ")";
      parts.push_back(std::move(s));
    }
    std::string acc = parts.back();
    for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i)
      acc = "mul(" + parts[i] + ", " + acc + ")";
    os << acc;
  } else {
    const auto& s = std::get<Sum>(nd.op);
    std::string acc = to_string(s.terms.back(), names);
    for (int i = static_cast<int>(s.terms.size()) - 2; i >= 0; --i)
      acc = "sum(" + to_string(s.terms[i], names) + ", " + acc + ")";
    os << acc;
  }
  return os.str();
}

}  // namespace cov
