#pragma once

#include <functional>
#include <string>

namespace dwexp {

/// Sink for diagnostic messages (quadrature tail warnings, guard trips,
/// monitor readings). Defaults to stderr. Safe to swap from any thread.
using LogSink = std::function<void(const std::string&)>;

void set_log_sink(LogSink sink);
void reset_log_sink();
void log_message(const std::string& msg);

}  // namespace dwexp
