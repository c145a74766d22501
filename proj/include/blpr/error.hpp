#pragma once

#include <stdexcept>
#include <string>

namespace blpr {

enum class Errc {
  FileNotFound,
  UnsupportedFormat,
  CorruptData,
  IoError,
  ZeroDimension,
  DimensionMismatch,
  ConstantImage,
  InvalidPercentiles,
  ProcessFailed,
  OutputMissing,
  Timeout,
  EmptyInput,
  BoxOutOfBounds,
  ShapeMismatch,
  LabelOutOfRange,
  EmptyDataset,
  BadMagic,
  VersionMismatch,
  ChecksumMismatch,
  MissingSplit,
  UnknownClassDir,
  UnreadableImage,
  ClassOutOfRange,
  EmptyMatrix,
  NoGlyphsFound,
  ModelVocabMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace blpr
