#pragma once

namespace slicereg {

// Execution policy for the data-parallel kernels. The serial path is the
// reference implementation; both paths reduce in a fixed order and return
// bit-identical results.
enum class Exec { serial, openmp };

}  // namespace slicereg
