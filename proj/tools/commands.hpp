#pragma once

#include "config.hpp"

namespace tflcli {

// Exit codes: 0 success / positive finding, 1 negative finding,
// 2 config error, 3 dimension error, 4 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNumerical = 4;

int cmd_stft(const RunConfig& cfg, const GlobalOptions& options);
int cmd_frame_check(const RunConfig& cfg, const GlobalOptions& options);
int cmd_construct(const RunConfig& cfg, const GlobalOptions& options);
int cmd_norms(const RunConfig& cfg, const GlobalOptions& options);
int cmd_equivalence(const RunConfig& cfg, const GlobalOptions& options);
int cmd_duality(const RunConfig& cfg, const GlobalOptions& options);
int cmd_partition_check(const RunConfig& cfg, const GlobalOptions& options);

}  // namespace tflcli
