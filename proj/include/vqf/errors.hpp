#pragma once

#include <stdexcept>
#include <string>

namespace vqf {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define VQF_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

// time-series ingestion and splitting
VQF_DEFINE_ERROR(MalformedRow);
VQF_DEFINE_ERROR(NonMonotonicTime);
VQF_DEFINE_ERROR(TargetOutOfRange);
VQF_DEFINE_ERROR(MissingColumn);
VQF_DEFINE_ERROR(IrregularCadence);
VQF_DEFINE_ERROR(EmptyPartition);
VQF_DEFINE_ERROR(InvalidSplit);
VQF_DEFINE_ERROR(EmptyInput);

// forecasters
VQF_DEFINE_ERROR(InsufficientData);
VQF_DEFINE_ERROR(InsufficientHistory);
VQF_DEFINE_ERROR(SingularSystem);
VQF_DEFINE_ERROR(DivergedLoss);

// kernels and ridge regression
VQF_DEFINE_ERROR(EmptyFeature);
VQF_DEFINE_ERROR(NonPositiveGamma);
VQF_DEFINE_ERROR(NotPositiveDefinite);
VQF_DEFINE_ERROR(DimensionMismatch);

// evaluation
VQF_DEFINE_ERROR(LengthMismatch);
VQF_DEFINE_ERROR(NonSymmetric);
VQF_DEFINE_ERROR(DegenerateVariance);
VQF_DEFINE_ERROR(MissingClass);
VQF_DEFINE_ERROR(DegenerateSigma);
VQF_DEFINE_ERROR(InvalidR);

// experiments
VQF_DEFINE_ERROR(MissingWindChannel);

// reporting
VQF_DEFINE_ERROR(UnfilledSlot);
VQF_DEFINE_ERROR(UnsupportedFormat);
VQF_DEFINE_ERROR(EmptyData);

// configuration
VQF_DEFINE_ERROR(InvalidConfig);

#undef VQF_DEFINE_ERROR

} // namespace vqf
