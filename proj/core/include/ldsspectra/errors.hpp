#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ldsspectra {

// Failure categories, doubling as CLI exit codes: usage 2, data 3, numeric 4.
enum class ErrorCategory : int { kUsage = 2, kData = 3, kNumeric = 4 };

class Error : public std::runtime_error {
 public:
  Error(std::string msg, ErrorCategory category)
      : std::runtime_error(std::move(msg)), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define LDSSPECTRA_DEFINE_ERROR(NAME, CATEGORY)                  \
  class NAME : public Error {                                    \
   public:                                                       \
    explicit NAME(const std::string& msg)                        \
        : Error(std::string(#NAME) + ": " + msg,                 \
                ErrorCategory::CATEGORY) {}                      \
  }

LDSSPECTRA_DEFINE_ERROR(InvalidDegree, kUsage);
LDSSPECTRA_DEFINE_ERROR(RootSolverFailure, kNumeric);
LDSSPECTRA_DEFINE_ERROR(SpectrumSizeMismatch, kData);
LDSSPECTRA_DEFINE_ERROR(DegenerateSpectrum, kNumeric);
LDSSPECTRA_DEFINE_ERROR(ShapeError, kData);
LDSSPECTRA_DEFINE_ERROR(InvalidParams, kData);
LDSSPECTRA_DEFINE_ERROR(GenerationFailure, kNumeric);
LDSSPECTRA_DEFINE_ERROR(SingularBasis, kNumeric);
LDSSPECTRA_DEFINE_ERROR(RankDeficient, kNumeric);
LDSSPECTRA_DEFINE_ERROR(InsufficientData, kData);
LDSSPECTRA_DEFINE_ERROR(MissingInputs, kData);
LDSSPECTRA_DEFINE_ERROR(OrderMismatch, kData);
LDSSPECTRA_DEFINE_ERROR(TooManyClusters, kData);
LDSSPECTRA_DEFINE_ERROR(LengthMismatch, kData);
LDSSPECTRA_DEFINE_ERROR(IoError, kData);
LDSSPECTRA_DEFINE_ERROR(CsvFormatError, kData);

#undef LDSSPECTRA_DEFINE_ERROR

}  // namespace ldsspectra
