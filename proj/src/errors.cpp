#include "rwb/errors.hpp"

namespace rwb {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MissingConstant: return "MissingConstant";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::SignatureMismatch: return "SignatureMismatch";
        case Errc::EmptyHom: return "EmptyHom";
        case Errc::NotInvolution: return "NotInvolution";
        case Errc::UnknownClass: return "UnknownClass";
        case Errc::UnknownChecker: return "UnknownChecker";
        case Errc::ResourceLimit: return "ResourceLimit";
        case Errc::ApFailure: return "ApFailure";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace rwb
