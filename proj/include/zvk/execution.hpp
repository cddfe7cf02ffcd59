#pragma once

namespace zvk {

/// Selects the serial reference path or the OpenMP path of a kernel. Both
/// produce identical results; the serial path is kept for testing.
enum class Execution { Serial, Parallel };

}  // namespace zvk
