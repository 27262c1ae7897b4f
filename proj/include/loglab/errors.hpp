#pragma once

#include <stdexcept>
#include <string>

namespace loglab {

struct NonConstantDistance : std::runtime_error {
    explicit NonConstantDistance(const std::string& what) : std::runtime_error(what) {}
};

struct NeedsRefinement : std::runtime_error {
    explicit NeedsRefinement(const std::string& what) : std::runtime_error(what) {}
};

struct DepthTooShallow : std::runtime_error {
    explicit DepthTooShallow(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroFunction : std::runtime_error {
    explicit ZeroFunction(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace loglab
