// Copyright 2026 The MoSim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOSIM_ERRORS_H_
#define MOSIM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mosim {

// Base class for all engine errors. kind() is the stable error-class name
// used in diagnostics and by the command-line exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string &kind() const { return kind_; }

 private:
  std::string kind_;
};

// Lexicon document does not conform to the schema.
class LexiconFormatError : public Error {
 public:
  LexiconFormatError(int line, std::string field, const std::string &detail)
      : Error("LexiconFormatError",
              "line " + std::to_string(line) + ", field '" + field + "': " + detail),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string &field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

class DuplicateEntryError : public Error {
 public:
  explicit DuplicateEntryError(const std::string &lemma)
      : Error("DuplicateEntryError", "duplicate entry '" + lemma + "'") {}
};

class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(std::string token)
      : Error("UnknownWordError", "unknown word '" + token + "'"), token_(std::move(token)) {}

  const std::string &token() const { return token_; }

 private:
  std::string token_;
};

class IllegalCharacterError : public Error {
 public:
  IllegalCharacterError(size_t offset, unsigned char c)
      : Error("IllegalCharacterError",
              "illegal character (byte 0x" + Hex(c) + ") at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  static std::string Hex(unsigned char c) {
    static const char kDigits[] = "0123456789abcdef";
    return {kDigits[c >> 4], kDigits[c & 15]};
  }

  size_t offset_;
};

class GrammarError : public Error {
 public:
  GrammarError(size_t position, const std::string &detail)
      : Error("GrammarError", "at token " + std::to_string(position) + ": " + detail),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

class PrepositionMismatchError : public Error {
 public:
  PrepositionMismatchError(const std::string &prep, const std::string &verb)
      : Error("PrepositionMismatchError",
              "verb '" + verb + "' does not take preposition '" + prep + "'") {}
};

class IncompatiblePathError : public Error {
 public:
  explicit IncompatiblePathError(const std::string &detail)
      : Error("IncompatiblePathError", detail) {}
};

class UnboundObjectError : public Error {
 public:
  explicit UnboundObjectError(std::string object)
      : Error("UnboundObjectError", "object '" + object + "' is not bound in the world"),
        object_(std::move(object)) {}

  const std::string &object() const { return object_; }

 private:
  std::string object_;
};

// Ill-typed term or formula (vector where a scalar is required, etc).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string &detail) : Error("DimensionError", detail) {}
};

// Structurally invalid program or formula (non-positive bound or tolerance).
class InvalidProgramError : public Error {
 public:
  explicit InvalidProgramError(const std::string &detail) : Error("InvalidProgramError", detail) {}
};

class NoSuccessfulRun : public Error {
 public:
  explicit NoSuccessfulRun(const std::string &detail) : Error("NoSuccessfulRun", detail) {}
};

class ExplosionGuard : public Error {
 public:
  explicit ExplosionGuard(size_t cap)
      : Error("ExplosionGuard",
              "enumeration frontier exceeded " + std::to_string(cap) + " nodes") {}
};

class ImmobileThemeError : public Error {
 public:
  explicit ImmobileThemeError(const std::string &object)
      : Error("ImmobileThemeError", "'" + object + "' is immobile and cannot be the theme of motion") {}
};

class UnsupportedShapePair : public Error {
 public:
  explicit UnsupportedShapePair(const std::string &detail)
      : Error("UnsupportedShapePair", detail) {}
};

class TraceSceneMismatch : public Error {
 public:
  explicit TraceSceneMismatch(const std::string &detail) : Error("TraceSceneMismatch", detail) {}
};

class DiamondNotAllowed : public Error {
 public:
  DiamondNotAllowed()
      : Error("DiamondNotAllowed", "modal formulas cannot be checked on a recorded trace") {}
};

class TraceFormatError : public Error {
 public:
  explicit TraceFormatError(const std::string &detail) : Error("TraceFormatError", detail) {}
};

class ProgramSyntaxError : public Error {
 public:
  ProgramSyntaxError(size_t offset, const std::string &detail)
      : Error("ProgramSyntaxError", "at offset " + std::to_string(offset) + ": " + detail),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &detail) : Error("ConfigError", detail) {}
};

}  // namespace mosim

#endif  // MOSIM_ERRORS_H_
