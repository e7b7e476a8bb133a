// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/error.hpp"

namespace gaze3d {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::BehindCamera: return "behind-camera";
        case Errc::NonPositiveDepth: return "non-positive-depth";
        case Errc::EmptyDepthImage: return "empty-depth-image";
        case Errc::BackingStoreFailure: return "backing-store-failure";
        case Errc::EmptyVolume: return "empty-volume";
        case Errc::NoFrames: return "no-frames";
        case Errc::ImageTooSmall: return "image-too-small";
        case Errc::DegenerateConfiguration: return "degenerate-configuration";
        case Errc::NoConsensus: return "no-consensus";
        case Errc::SingularNormalEquations: return "singular-normal-equations";
        case Errc::LocalizationFailed: return "localization-failed";
        case Errc::InsufficientObservations: return "insufficient-observations";
        case Errc::CorpusTooSmall: return "corpus-too-small";
        case Errc::VocabularyMissing: return "vocabulary-missing";
        case Errc::EmptyMesh: return "empty-mesh";
        case Errc::InvalidSample: return "invalid-sample";
        case Errc::NoLocalizedDetections: return "no-localized-detections";
        case Errc::DegeneratePolygon: return "degenerate-polygon";
        case Errc::EmptyDenominator: return "empty-denominator";
        case Errc::EmptyGroundTruth: return "empty-ground-truth";
        case Errc::MeshMismatch: return "mesh-mismatch";
        case Errc::NonMonotoneTimestamps: return "non-monotone-timestamps";
        case Errc::CameraInsideGeometry: return "camera-inside-geometry";
        case Errc::TargetBehindCamera: return "target-behind-camera";
        case Errc::ConfigInvalid: return "config-invalid";
        case Errc::InputMissing: return "input-missing";
        case Errc::IoFailure: return "io-failure";
    }
    return "unknown";
}

}  // namespace gaze3d
