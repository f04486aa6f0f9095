#pragma once

#define WIGNER_VERSION "0.1.0"
