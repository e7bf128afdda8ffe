#pragma once

#include "qtop/error.hpp"
#include "qtop/rational.hpp"
#include "qtop/cyclotomic.hpp"
#include "qtop/field.hpp"
#include "qtop/constants.hpp"
#include "qtop/matrix.hpp"
#include "qtop/quantum_algebra.hpp"
#include "qtop/diagram.hpp"
#include "qtop/framed_link.hpp"
#include "qtop/slice_io.hpp"
#include "qtop/evaluator.hpp"
#include "qtop/skein.hpp"
#include "qtop/tqft.hpp"
#include "qtop/json_io.hpp"
#include "qtop/properties.hpp"
