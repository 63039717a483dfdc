#pragma once

#include <cstddef>

namespace qfq {

/// Selects the serial reference kernel or the OpenMP kernel.
enum class Exec { serial, parallel };

void set_threads(int n);
int max_threads();

}  // namespace qfq
