// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gaze3d {

// Failure categories. The CLI maps these onto exit codes and the
// single-line machine-parsable error tags.
enum class Errc {
    BehindCamera,
    NonPositiveDepth,
    EmptyDepthImage,
    BackingStoreFailure,
    EmptyVolume,
    NoFrames,
    ImageTooSmall,
    DegenerateConfiguration,
    NoConsensus,
    SingularNormalEquations,
    LocalizationFailed,
    InsufficientObservations,
    CorpusTooSmall,
    VocabularyMissing,
    EmptyMesh,
    InvalidSample,
    NoLocalizedDetections,
    DegeneratePolygon,
    EmptyDenominator,
    EmptyGroundTruth,
    MeshMismatch,
    NonMonotoneTimestamps,
    CameraInsideGeometry,
    TargetBehindCamera,
    ConfigInvalid,
    InputMissing,
    IoFailure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gaze3d
