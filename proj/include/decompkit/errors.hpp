#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace decompkit {

enum class errc {
  malformed_input,
  missing_edge,
  malformed_embedding,
  embedding_required,
  width_violation,
  model_violation,
  composition_mismatch,
  invalid_decomposition,
  invalid_drawing,
  instance_too_large,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_input: return "malformed-input";
    case errc::missing_edge: return "missing-edge";
    case errc::malformed_embedding: return "malformed-embedding";
    case errc::embedding_required: return "embedding-required";
    case errc::width_violation: return "width-violation";
    case errc::model_violation: return "model-violation";
    case errc::composition_mismatch: return "composition-mismatch";
    case errc::invalid_decomposition: return "invalid-decomposition";
    case errc::invalid_drawing: return "invalid-drawing";
    case errc::instance_too_large: return "instance-too-large";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace decompkit
