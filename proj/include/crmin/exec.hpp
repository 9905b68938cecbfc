#pragma once

namespace crmin {

// Serial drivers are the reference implementations kept for testing; the
// parallel drivers are the OpenMP defaults and must produce identical output.
enum class Exec { Serial, Parallel };

}  // namespace crmin
