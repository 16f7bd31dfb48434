#pragma once

#include <stdexcept>
#include <string>

namespace locgame {

enum class errc {
  bad_vertex,
  loop_edge,
  duplicate_edge,
  disconnected,
  bad_params,
  parse_error,
  invalid_decomposition,
  not_a_tree,
  bad_probe,
  bad_strategy,
  budget_exceeded,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_vertex: return "bad_vertex";
    case errc::loop_edge: return "loop_edge";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::disconnected: return "disconnected";
    case errc::bad_params: return "bad_params";
    case errc::parse_error: return "parse_error";
    case errc::invalid_decomposition: return "invalid_decomposition";
    case errc::not_a_tree: return "not_a_tree";
    case errc::bad_probe: return "bad_probe";
    case errc::bad_strategy: return "bad_strategy";
    case errc::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace locgame
