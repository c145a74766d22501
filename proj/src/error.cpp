#include "blpr/error.hpp"

namespace blpr {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::CorruptData: return "CorruptData";
    case Errc::IoError: return "IoError";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ConstantImage: return "ConstantImage";
    case Errc::InvalidPercentiles: return "InvalidPercentiles";
    case Errc::ProcessFailed: return "ProcessFailed";
    case Errc::OutputMissing: return "OutputMissing";
    case Errc::Timeout: return "Timeout";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BoxOutOfBounds: return "BoxOutOfBounds";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::MissingSplit: return "MissingSplit";
    case Errc::UnknownClassDir: return "UnknownClassDir";
    case Errc::UnreadableImage: return "UnreadableImage";
    case Errc::ClassOutOfRange: return "ClassOutOfRange";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::NoGlyphsFound: return "NoGlyphsFound";
    case Errc::ModelVocabMismatch: return "ModelVocabMismatch";
  }
  return "UnknownError";
}

}  // namespace blpr
