#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace jsdmix {

// Ordered set of distinct symbol labels. Pmfs hold a shared_ptr to their
// alphabet; two Pmfs are compatible when their alphabets compare equal.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> labels_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Labels "1".."n".
AlphabetPtr indexed_alphabet(std::size_t n);

// The shared six-symbol alphabet {1,...,6} used by the die scenarios.
const AlphabetPtr& six_faces();

}  // namespace jsdmix
