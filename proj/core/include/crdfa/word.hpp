#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <vector>

#include "crdfa/state_set.hpp"

namespace crdfa {

/// Immutable word over letter indices.
///
/// Concatenation shares both operands instead of copying them, so building
/// a word by repeated prepending costs O(1) per step. Short results are
/// flattened into a single leaf.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word letter(Letter a);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Letters in reading order.
  std::vector<Letter> letters() const;

  /// Calls f(letter) left to right.
  template <typename F>
  void for_each(F&& f) const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  bool operator==(const Word& other) const;

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

struct Word::Node {
  std::size_t length = 0;
  std::vector<Letter> leaf;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;

  bool is_leaf() const noexcept { return left == nullptr; }
};

template <typename F>
void Word::for_each(F&& f) const {
  if (!root_) return;
  std::vector<const Node*> stack{root_.get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->is_leaf()) {
      for (Letter a : node->leaf) f(a);
    } else {
      stack.push_back(node->right.get());
      stack.push_back(node->left.get());
    }
  }
}

}  // namespace crdfa
