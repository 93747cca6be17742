#pragma once

#include "mdir/analysis.hpp"
#include "mdir/arith_function.hpp"
#include "mdir/errors.hpp"
#include "mdir/io.hpp"
#include "mdir/multi_index.hpp"
#include "mdir/prime_series.hpp"
#include "mdir/rational.hpp"
#include "mdir/series.hpp"
#include "mdir/ufd.hpp"
