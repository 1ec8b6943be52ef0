#pragma once

#include "sdof/channel.hpp"
#include "sdof/complex_matrix.hpp"
#include "sdof/estimator.hpp"
#include "sdof/gaussian_mi.hpp"
#include "sdof/region.hpp"
#include "sdof/report.hpp"
#include "sdof/schemes.hpp"
