// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace pinion {

inline const char* version() { return "0.1.0"; }

} // namespace pinion
