#pragma once

#include <stdexcept>
#include <string>

namespace diffdep {

enum class ErrKind {
    InvalidArgument,
    Parse,
    SignatureMismatch,
    Arity,
    Domain,
    Resource,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind(kind) {}
    ErrKind kind;
};

class ParseError : public Error {
  public:
    ParseError(std::string msg, int line, int col)
        : Error(ErrKind::Parse,
                std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace diffdep
