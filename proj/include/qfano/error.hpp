#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfano {

enum class Errc {
  InvalidPoint,
  Range,
  NoInverse,
  UnsupportedIndex,
  Inconsistent,
  NonTerminal,
  Unsupported,
  CartierAtPoint,
  InconsistentRelation,
  NotFound,
  Unbounded,
  Parse,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidPoint: return "invalid-point";
    case Errc::Range: return "range";
    case Errc::NoInverse: return "no-inverse";
    case Errc::UnsupportedIndex: return "unsupported-index";
    case Errc::Inconsistent: return "inconsistency";
    case Errc::NonTerminal: return "non-terminal";
    case Errc::Unsupported: return "unsupported";
    case Errc::CartierAtPoint: return "cartier-at-point";
    case Errc::InconsistentRelation: return "inconsistent-relation";
    case Errc::NotFound: return "not-found";
    case Errc::Unbounded: return "unbounded";
    case Errc::Parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qfano
