#include "dwexp/log.hpp"

#include <cstdio>
#include <mutex>
#include <utility>

namespace dwexp {
namespace {

std::mutex sink_mutex;
LogSink current_sink;  // empty means stderr

}  // namespace

void set_log_sink(LogSink sink) {
  std::lock_guard<std::mutex> lock(sink_mutex);
  current_sink = std::move(sink);
}

void reset_log_sink() { set_log_sink(LogSink{}); }

void log_message(const std::string& msg) {
  std::lock_guard<std::mutex> lock(sink_mutex);
  if (current_sink) {
    current_sink(msg);
  } else {
    std::fprintf(stderr, "%s\n", msg.c_str());
  }
}

}  // namespace dwexp
