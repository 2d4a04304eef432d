#pragma once

#include <stdexcept>
#include <string>

namespace vkmap {

enum class Errc {
  kNotInvolution,
  kNotConnected,
  kNotPlanar,
  kBadOuterDart,
  kUnknownRegion,
  kUnknownVertex,
  kBasepointNotOnBoundary,
  kInvalidDecomposition,
  kPathNotOnBoundary,
  kNotCyclicallyReduced,
  kNotSymmetricallyClosed,
  kNotFreelyReduced,
  kUnknownGenerator,
  kUnlabelledEdge,
  kSyntaxError,
  kDanglingDart,
  kDuplicateDart,
  kConfigInvalid,
  kNotInClass,
  kNotSerializable,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vkmap
