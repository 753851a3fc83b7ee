#pragma once

namespace tropsl {

// Selects the OpenMP kernel or its serial reference. Both produce identical
// results; the serial path is what the tests compare against.
enum class Execution { serial, parallel };

}  // namespace tropsl
