#pragma once

#include <stdexcept>
#include <string>

namespace sumkit {

// Base class for every domain error the library raises. I/O and config
// problems get their own branches so the CLI can map them to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Corpus cleaning produced no sentences, or an operation received an empty
// document. The context string says which.
class EmptyDocumentError : public Error {
public:
    using Error::Error;
};

class NotEnglishError : public Error {
public:
    using Error::Error;
};

class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

class InsufficientCorpusError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    FormatError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class EmptyDescriptionError : public Error {
public:
    using Error::Error;
};

class CannotBalanceError : public Error {
public:
    using Error::Error;
};

class SingleClassError : public Error {
public:
    using Error::Error;
};

class ModelMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidNError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidLengthsError : public Error {
public:
    using Error::Error;
};

// Raised by the stacked summarizer when stage 1 leaves nothing for stage 2;
// callers use it to trigger fallback.
class StageEmptyError : public Error {
public:
    StageEmptyError(const std::string& what, int stage) : Error(what), stage_(stage) {}
    int stage() const { return stage_; }

private:
    int stage_ = 0;
};

} // namespace sumkit
