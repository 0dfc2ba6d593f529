#pragma once

#include <string>
#include <vector>

#include "powclass.hpp"

#ifndef POWCLASS_TEST_CORPUS
#error "POWCLASS_TEST_CORPUS must point at the shipped corpus file"
#endif

namespace fixtures {

/// The shipped corpus, loaded once per test binary.
inline const std::vector<powclass::CorpusEntry>& corpus() {
  static const std::vector<powclass::CorpusEntry> entries = powclass::load_corpus(POWCLASS_TEST_CORPUS);
  return entries;
}

inline const powclass::CorpusEntry& entry(const std::string& label) {
  for (const auto& e : corpus()) {
    if (e.label() == label) return e;
  }
  throw powclass::Error(powclass::ErrorKind::UnknownGroup, label);
}

}  // namespace fixtures
