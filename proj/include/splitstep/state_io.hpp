#ifndef SPLITSTEP_STATE_IO_HPP
#define SPLITSTEP_STATE_IO_HPP

#include <map>
#include <string>

#include "splitstep/state.hpp"

namespace splitstep {

// Plain-text state dump used by the harness for reference caching.
// Layout: '#'-prefixed header lines carrying the grid geometry plus caller
// metadata, then a CSV body "component,ix[,iy],re,im" with 17 significant
// digits. Exact round trip of the double values is guaranteed.
void write_state_csv(const State& state, const std::string& path,
                     const std::map<std::string, std::string>& metadata = {});

struct LoadedState {
    State state;
    std::map<std::string, std::string> metadata;
};

LoadedState read_state_csv(const std::string& path);

}  // namespace splitstep

#endif
