#pragma once

namespace hyperspec {

/// Worker cap for the OpenMP kernels: HYPERSPEC_THREADS when set and
/// positive (clamped to the OpenMP maximum), otherwise the OpenMP maximum;
/// 1 when built without OpenMP.
int worker_count();

}  // namespace hyperspec
