#include "qlw.h"

int main(int argc, char** argv) {
    return qlw_run(argc - 1, const_cast<const char* const*>(argv + 1));
}
