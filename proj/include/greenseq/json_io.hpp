#pragma once

#include <string>

#include "greenseq/presets.hpp"

namespace greenseq {

/* Parse a quiver document {"n":..,"d":[..],"b0":[[..]..][,"e":[[..]..]]}.
 * Any malformed or invariant-violating input throws InvalidInput. */
QuiverFile parse_quiver_json(const std::string& text);

/* Read and parse a file; throws InvalidInput on I/O failure. */
QuiverFile load_quiver_file(const std::string& path);

/* Serialize with stable key order and a trailing newline; parses back to an
 * identical QuiverFile. */
std::string quiver_to_json(const QuiverFile& qf);

/* Explicit Euler matrix when present (fully validated), else derived from b0. */
EulerData euler_for(const QuiverFile& qf);

}  // namespace greenseq
