#pragma once

#include <stdexcept>
#include <string>

namespace mitograph {

// Base class for all failures raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter regime beta <= mu (the model requires strict supercriticality).
class SubcriticalOrCritical : public Error {
public:
    explicit SubcriticalOrCritical(const std::string& what) : Error(what) {}
};

class NonpositiveRate : public Error {
public:
    explicit NonpositiveRate(const std::string& what) : Error(what) {}
};

class NegativeDiffusion : public Error {
public:
    explicit NegativeDiffusion(const std::string& what) : Error(what) {}
};

// Live-particle budget exceeded during an ensemble run.
class PopulationCapExceeded : public Error {
public:
    PopulationCapExceeded(const std::string& what, std::uint64_t replicate = 0)
        : Error(what), replicate_index(replicate) {}
    std::uint64_t replicate_index;
};

class InsufficientSamples : public Error {
public:
    explicit InsufficientSamples(const std::string& what) : Error(what) {}
};

// Kernel support touches 1 (a = 0), making 1/(1-theta) heavy-tailed.
class DegenerateKernel : public Error {
public:
    explicit DegenerateKernel(const std::string& what) : Error(what) {}
};

class InsufficientTailData : public Error {
public:
    explicit InsufficientTailData(const std::string& what) : Error(what) {}
};

class CFLViolation : public Error {
public:
    explicit CFLViolation(const std::string& what) : Error(what) {}
};

class IntegrationFailure : public Error {
public:
    explicit IntegrationFailure(const std::string& what) : Error(what) {}
};

// The expected-density level set l1 = 1 does not exist yet at this time.
class FrontUndefined : public Error {
public:
    explicit FrontUndefined(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace mitograph
