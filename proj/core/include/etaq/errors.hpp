#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

/* Base class for everything the kernel can throw. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ETAQ_ERROR_TYPE(Name)                                          \
    class Name : public Error {                                       \
    public:                                                            \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

ETAQ_ERROR_TYPE(ZeroConstantTerm);
ETAQ_ERROR_TYPE(NotSquare);
ETAQ_ERROR_TYPE(OutOfRange);
ETAQ_ERROR_TYPE(OddIndex);
ETAQ_ERROR_TYPE(NotOddPrime);
ETAQ_ERROR_TYPE(BadWeight);
ETAQ_ERROR_TYPE(BadResidue);
ETAQ_ERROR_TYPE(NotCoprime);
ETAQ_ERROR_TYPE(BadLabel);
ETAQ_ERROR_TYPE(NonIntegerValue);
ETAQ_ERROR_TYPE(SingularWronskian);
ETAQ_ERROR_TYPE(PrefixMismatch);
ETAQ_ERROR_TYPE(ExponentMismatch);
ETAQ_ERROR_TYPE(EmptyList);
ETAQ_ERROR_TYPE(UnknownIdentity);
ETAQ_ERROR_TYPE(BadParams);

#undef ETAQ_ERROR_TYPE

} // namespace etaq
