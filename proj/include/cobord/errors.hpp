#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cobord {

// Typed failures. `code` is stable and machine-readable; the CLI maps codes
// onto exit statuses (verified negatives vs. input errors vs. internal bugs).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error invalid_endpoint(const std::string& m) { return Error("InvalidEndpoint", m); }
inline Error not_a_sink(const std::string& m) { return Error("NotASink", m); }
inline Error too_large(const std::string& m) { return Error("TooLarge", m); }
inline Error not_a_chain_complex(const std::string& m) { return Error("NotAChainComplex", m); }
inline Error dimension_mismatch(const std::string& m) { return Error("DimensionMismatch", m); }
inline Error non_manifold(const std::string& m) { return Error("NonManifold", m); }
inline Error non_orientable(const std::string& m) { return Error("NonOrientable", m); }
inline Error unglued(const std::string& m) { return Error("Unglued", m); }
inline Error not_proper(const std::string& m) { return Error("NotProper", m); }
inline Error inconsistent_coorientation(const std::string& m) {
  return Error("InconsistentCoorientation", m);
}
inline Error cell_on_boundary(const std::string& m) { return Error("CellOnBoundary", m); }
inline Error loop_not_closed(const std::string& m) { return Error("LoopNotClosed", m); }
inline Error not_disjoint(const std::string& m) { return Error("NotDisjoint", m); }
inline Error homology_mismatch(const std::string& m) { return Error("HomologyMismatch", m); }
inline Error not_balanced(const std::string& m) { return Error("NotBalanced", m); }
inline Error not_transverse(const std::string& m) { return Error("NotTransverse", m); }
inline Error not_bipartite(const std::string& m) { return Error("NotBipartite", m); }
inline Error boundary_unsupported(const std::string& m) { return Error("BoundaryUnsupported", m); }
inline Error sweep_stuck(const std::string& m) { return Error("SweepStuck", m); }
inline Error no_path(const std::string& m) { return Error("NoPath", m); }
inline Error bad_input(const std::string& m) { return Error("BadInput", m); }
inline Error internal_error(const std::string& m) { return Error("InternalError", m); }

}  // namespace cobord
