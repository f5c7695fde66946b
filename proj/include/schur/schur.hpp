#pragma once

#include "schur/algebra.hpp"
#include "schur/center.hpp"
#include "schur/commutative.hpp"
#include "schur/corner.hpp"
#include "schur/error.hpp"
#include "schur/field.hpp"
#include "schur/group_algebra.hpp"
#include "schur/io.hpp"
#include "schur/laurent.hpp"
#include "schur/laurent_form.hpp"
#include "schur/random.hpp"
#include "schur/rewrite.hpp"
#include "schur/suite.hpp"
#include "schur/weyl.hpp"
