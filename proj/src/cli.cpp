#include "plurikit/cli.hpp"

#include <ostream>

namespace plurikit {

int cli_run(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
    err << "not yet implemented\n";
    return 2;
}

}  // namespace plurikit
