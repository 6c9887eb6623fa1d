#include "irid/error.hpp"

namespace irid {

std::string_view stage_name(Stage stage) noexcept {
    switch (stage) {
    case Stage::Nilt:
        return "NiltStage";
    case Stage::Fit:
        return "FitStage";
    case Stage::Conversion:
        return "ConversionStage";
    }
    return "UnknownStage";
}

StageError::StageError(Stage stage, const std::string& what)
    : Error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}

}  // namespace irid

#include "irid/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace irid {
namespace {

std::mutex sink_mutex;

WarningSink& current_sink() {
    static WarningSink sink = [](std::string_view msg) {
        std::clog << "warning: " << msg << '\n';
    };
    return sink;
}

}  // namespace

WarningSink set_warning_sink(WarningSink sink) {
    std::lock_guard lock(sink_mutex);
    return std::exchange(current_sink(), std::move(sink));
}

void warn(std::string_view message) {
    std::lock_guard lock(sink_mutex);
    if (auto& sink = current_sink()) sink(message);
}

}  // namespace irid
