#pragma once

// Umbrella header for the whole library.

#include "logcob/chow.hpp"
#include "logcob/cobordism.hpp"
#include "logcob/error.hpp"
#include "logcob/json_io.hpp"
#include "logcob/linalg.hpp"
#include "logcob/logchern.hpp"
#include "logcob/rational.hpp"
#include "logcob/series.hpp"
#include "logcob/varieties.hpp"
