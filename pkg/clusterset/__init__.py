#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from clusterset.decision import decide, verify_witness
from clusterset.document import load_matrix_set
