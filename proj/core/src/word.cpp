#include "crdfa/word.hpp"

namespace crdfa {

namespace {

// Concatenations at most this long are copied into a flat leaf.
constexpr std::size_t kFlattenLength = 32;

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) {
  if (letters.empty()) return;
  auto node = std::make_shared<Node>();
  node->length = letters.size();
  node->leaf = std::move(letters);
  root_ = std::move(node);
}

Word Word::letter(Letter a) { return Word(std::vector<Letter>{a}); }

std::size_t Word::size() const noexcept { return root_ ? root_->length : 0; }

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for_each([&](Letter a) { out.push_back(a); });
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  auto node = std::make_shared<Word::Node>();
  node->length = lhs.size() + rhs.size();
  if (node->length <= kFlattenLength) {
    node->leaf.reserve(node->length);
    lhs.for_each([&](Letter a) { node->leaf.push_back(a); });
    rhs.for_each([&](Letter a) { node->leaf.push_back(a); });
  } else {
    node->left = lhs.root_;
    node->right = rhs.root_;
  }
  return Word(std::shared_ptr<const Word::Node>(std::move(node)));
}

bool Word::operator==(const Word& other) const {
  if (size() != other.size()) return false;
  if (root_ == other.root_) return true;
  return letters() == other.letters();
}

}  // namespace crdfa
