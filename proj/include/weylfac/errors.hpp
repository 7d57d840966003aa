#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weylfac {

/// Degree and factorization entry points reject the zero polynomial.
class ZeroPolynomialError : public std::invalid_argument {
public:
    ZeroPolynomialError() : std::invalid_argument("zero polynomial has no degree or factorization") {}
};

/// Input mixes several graded components; carries their degrees and spellings.
class InhomogeneousError : public std::invalid_argument {
public:
    struct Component {
        long degree;
        std::string text;
    };

    explicit InhomogeneousError(std::vector<Component> parts)
        : std::invalid_argument(describe(parts)), parts_(std::move(parts)) {}

    const std::vector<Component>& components() const { return parts_; }

private:
    static std::string describe(const std::vector<Component>& parts) {
        std::string s = "polynomial is not homogeneous; graded components:";
        for (const auto& p : parts) s += "\n  degree " + std::to_string(p.degree) + ": " + p.text;
        return s;
    }
    std::vector<Component> parts_;
};

class ContextMismatchError : public std::invalid_argument {
public:
    ContextMismatchError() : std::invalid_argument("operands live in different algebras") {}
};

class InexactDivisionError : public std::domain_error {
public:
    explicit InexactDivisionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace weylfac
