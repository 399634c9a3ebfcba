#include "jsdmix/alphabet.hpp"

#include <stdexcept>
#include <unordered_set>

namespace jsdmix {

Alphabet::Alphabet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("alphabet needs at least one label");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate alphabet label: " + l);
    }
  }
}

AlphabetPtr indexed_alphabet(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<const Alphabet>(std::move(labels));
}

const AlphabetPtr& six_faces() {
  static const AlphabetPtr faces = indexed_alphabet(6);
  return faces;
}

}  // namespace jsdmix
