#pragma once

#include <stdexcept>
#include <string>

namespace bookbind {

enum class Errc {
  InvalidSize,
  InvalidJump,
  InvalidGraph,
  InvalidSpec,
  HalfJump,
  InvalidKind,
  InvalidPartition,
  NoUniqueSolution,
  NotReducible,
  Coverage,
  InvalidCertificate,
  InvalidEmbedding,
  InvalidBudget,
  Precondition,
  ConstructionFailed,
  Parse,
  Io,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bookbind
