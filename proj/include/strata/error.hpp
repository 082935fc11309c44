#pragma once

#include <stdexcept>
#include <string>

namespace strata {

enum class Errc {
    SumMismatch,
    SimplePolePresent,
    DegreeTooSmall,
    NonIntegralGenus,
    NegativeGenus,
    SignatureShapeError,
    EmptyStratum,
    SumNonzero,
    DimensionMismatch,
    ShapeError,
    DisconnectedSurface,
    PoleIndexOutOfRange,
    NotATree,
    NotFullOrder,
    InconsistentSplit,
    ProductNotIdentity,
    NotTransitive,
    IndexOutOfRange,
    InstanceTooLarge,
    RecursionFailure,
    InvalidInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace strata
