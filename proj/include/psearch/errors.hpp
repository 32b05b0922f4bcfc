#pragma once

#include <stdexcept>
#include <string>

namespace psearch {

/// Malformed input document (catalog, manifest, tree dump, split file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad run configuration or unusable launch environment.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure reported by a rewriter/generator/scorer backend.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Transport-level failure (connect, timeout, retries exhausted).
class TransportError : public BackendError {
public:
    TransportError(const std::string& msg, int last_status = 0)
        : BackendError(msg), last_status_(last_status) {}
    int last_status() const { return last_status_; }

private:
    int last_status_;
};

/// Backend answered but outside its wire contract (empty completion,
/// non-numeric score, missing fields).
class ProtocolError : public BackendError {
public:
    explicit ProtocolError(const std::string& msg) : BackendError(msg) {}
};

/// Authentication / authorization rejection (401, 403, missing credential).
class AuthError : public BackendError {
public:
    explicit AuthError(const std::string& msg) : BackendError(msg) {}
};

}  // namespace psearch
