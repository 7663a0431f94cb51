#pragma once

#include <stdexcept>
#include <string>

namespace symhom {

// Computation errors carry a stable name so the CLI can report them verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define SYMHOM_ERROR_TYPE(Type)                                        \
    class Type : public Error {                                        \
    public:                                                            \
        explicit Type(const std::string& what) : Error(#Type, what) {} \
    }

SYMHOM_ERROR_TYPE(ArityMismatch);
SYMHOM_ERROR_TYPE(NotAssociative);
SYMHOM_ERROR_TYPE(NotUnital);
SYMHOM_ERROR_TYPE(NoIdentity);
SYMHOM_ERROR_TYPE(UngradedAlgebra);
SYMHOM_ERROR_TYPE(NonCommutativeMonoid);
SYMHOM_ERROR_TYPE(CompositeCharacteristic);
SYMHOM_ERROR_TYPE(NotAComplex);
SYMHOM_ERROR_TYPE(ShapeMismatch);
SYMHOM_ERROR_TYPE(DegreeOutOfRange);
SYMHOM_ERROR_TYPE(InvalidCover);
SYMHOM_ERROR_TYPE(NotCycleFree);
SYMHOM_ERROR_TYPE(ChainMapViolation);
SYMHOM_ERROR_TYPE(ParseError);

#undef SYMHOM_ERROR_TYPE

}  // namespace symhom
