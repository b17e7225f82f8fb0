#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cov/poly.hpp"

namespace cov {

// Covariants are represented by evaluation programs: DAGs of transvectant /
// product / power / sum nodes rooted at the generic form f.  Nodes live in a
// shared hash-consed arena so that catalog entries reuse common sub-DAGs and
// a single per-form cache serves every root.
class ProgramArena {
 public:
  struct Leaf {};
  struct Transvect {
    int left, right, index;
  };
  // Monomial in earlier nodes: sorted (node, exponent) pairs, exponents >= 1.
  struct Product {
    std::vector<std::pair<int, int>> factors;
  };
  // Sum of equal-bidegree nodes (needed once, for the decimic p14 invariant).
  struct Sum {
    std::vector<int> terms;
  };
  using Op = std::variant<Leaf, Transvect, Product, Sum>;

  struct Node {
    Op op;
    int degree;
    int order;
  };

  explicit ProgramArena(int form_degree) : n_(form_degree) {
    nodes_.push_back(Node{Leaf{}, 1, n_});
  }

  int form_degree() const { return n_; }
  int leaf() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(int i) const { return nodes_.at(i); }
  int degree(int i) const { return nodes_.at(i).degree; }
  int order(int i) const { return nodes_.at(i).order; }

  int transvect(int left, int right, int index);
  int product(std::vector<std::pair<int, int>> factors);
  int sum(std::vector<int> terms);

  // Formats a root as a catalog-DSL expression given names for shared nodes.
  std::string to_string(int root,
                        const std::unordered_map<int, std::string>& names = {})
      const;

  template <class R>
  using EvalCache = std::vector<std::optional<HomPoly<R>>>;

  // Evaluates a root at a concrete form.  The cache is keyed by node index
  // and must only be reused with the identical form; callers keep one cache
  // per (form, worker).
  template <class R>
  const HomPoly<R>& evaluate(int root, const BinaryForm<R>& form,
                             EvalCache<R>& cache) const {
    if (form.order != n_)
      throw std::invalid_argument("form degree does not match program leaf");
    if (cache.size() < nodes_.size()) cache.resize(nodes_.size());
    return eval_node(root, form, cache);
  }

  template <class R>
  HomPoly<R> evaluate(int root, const BinaryForm<R>& form) const {
    EvalCache<R> cache;
    return evaluate(root, form, cache);
  }

 private:
  template <class R>
  const HomPoly<R>& eval_node(int idx, const BinaryForm<R>& form,
                              EvalCache<R>& cache) const {
    if (cache[idx]) return *cache[idx];
    const Node& nd = nodes_[idx];
    HomPoly<R> value;
    if (std::holds_alternative<Leaf>(nd.op)) {
      value = form;
    } else if (auto* t = std::get_if<Transvect>(&nd.op)) {
      const auto& l = eval_node(t->left, form, cache);
      const auto& r = eval_node(t->right, form, cache);
      value = transvectant(l, r, t->index);
    } else if (auto* pr = std::get_if<Product>(&nd.op)) {
      value = HomPoly<R>(form.ring, 0);
      value.c[0] = form.ring.one();
      for (const auto& [child, e] : pr->factors)
        value = mul(value, pow(eval_node(child, form, cache), e));
    } else {
      const auto& s = std::get<Sum>(nd.op);
      value = eval_node(s.terms.front(), form, cache);
      for (std::size_t i = 1; i < s.terms.size(); ++i)
        value = add(value, eval_node(s.terms[i], form, cache));
    }
    cache[idx] = std::move(value);
    return *cache[idx];
  }

  int intern(Node nd, const std::string& key);

  int n_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> dedup_;
};

}  // namespace cov
