#include "strata/error.hpp"

namespace strata {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SumMismatch: return "SumMismatch";
        case Errc::SimplePolePresent: return "SimplePolePresent";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::NonIntegralGenus: return "NonIntegralGenus";
        case Errc::NegativeGenus: return "NegativeGenus";
        case Errc::SignatureShapeError: return "SignatureShapeError";
        case Errc::EmptyStratum: return "EmptyStratum";
        case Errc::SumNonzero: return "SumNonzero";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ShapeError: return "ShapeError";
        case Errc::DisconnectedSurface: return "DisconnectedSurface";
        case Errc::PoleIndexOutOfRange: return "PoleIndexOutOfRange";
        case Errc::NotATree: return "NotATree";
        case Errc::NotFullOrder: return "NotFullOrder";
        case Errc::InconsistentSplit: return "InconsistentSplit";
        case Errc::ProductNotIdentity: return "ProductNotIdentity";
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InstanceTooLarge: return "InstanceTooLarge";
        case Errc::RecursionFailure: return "RecursionFailure";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace strata
