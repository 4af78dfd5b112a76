#ifndef GIE_ERROR_HPP
#define GIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gie {

enum class Errc {
    LayoutMismatch,
    UnknownGenerator,
    DuplicateSlot,
    OddOrConstantPart,
    NonOddImage,
    DomainOverlap,
    SingularQuadraticBlock,
    FormalLogProduct,
    NotSquare,
    BadOrder,
    SizeMismatch,
    Singular,
    BadShape,
    UnbalancedTerm,
    SingularPartition,
    SingularInput,
    PreconditionViolated,
    ShapeMismatch,
    SingularA2,
    NonPositiveMu,
    InsufficientDegree,
    ParseError,
    Unsupported,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace gie

#endif
