#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wvkit/wvcnn.hpp"

namespace wvkit {

/// A trained classifier plus the surface form of every embedding row, so a
/// checkpoint can score raw text without the original embedding file.
struct Checkpoint {
  CnnModel model;
  std::vector<std::string> words;
};

// JSON document:
//   {"format": "wvkit-cnn", "version": 1, "sequence_length": L, "seed": s,
//    "words": [...],
//    "layers": [{"type": "embedding", "vocab_size": V, "dim": d,
//                "frozen": false, "weights": {"shape": [...], "values": [...]}},
//               {"type": "conv1d", ...}, ...]}
// Values are written with round-trip precision, so reading a checkpoint back
// reproduces every parameter bit for bit.

void write_checkpoint(std::ostream& out, const Checkpoint& checkpoint);
void write_checkpoint(const std::filesystem::path& path,
                      const Checkpoint& checkpoint);

/// Throws IoError on unreadable or malformed documents and DomainError when
/// the decoded model fails validation.
Checkpoint read_checkpoint(std::istream& in);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace wvkit
