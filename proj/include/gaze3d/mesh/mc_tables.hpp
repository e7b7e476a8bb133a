// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace gaze3d::mesh {

// Bit i set = cube edge i is crossed by the isosurface for that corner
// configuration.
extern const uint16_t kMcEdgeTable[256];

// Triangle fans as edge-index triples, -1 terminated.
extern const int8_t kMcTriTable[256][16];

}  // namespace gaze3d::mesh
