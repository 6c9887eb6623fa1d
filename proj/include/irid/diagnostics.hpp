#pragma once

#include <functional>
#include <string_view>

namespace irid {

using WarningSink = std::function<void(std::string_view)>;

/// Installs the receiver for non-fatal warnings and returns the previous one.
/// The default sink writes to std::clog. Passing an empty function silences
/// warnings.
WarningSink set_warning_sink(WarningSink sink);

void warn(std::string_view message);

}  // namespace irid
