# Copyright 2022 The GenStore Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Sequence input/output and 2-bit encoding.

.. currentmodule:: genstore.seqio

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: seqio

    encoding.Base
    fastx.Read
    fastx.ReadSet
    fastx.ReferenceGenome

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: seqio

    encoding.encode
    encoding.decode
    encoding.pack
    encoding.unpack
    encoding.revcomp
    fastx.parse_fastq
    fastx.parse_fasta
    fastx.write_fastq
    fastx.write_fasta

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: seqio
    :template: autosummary/submodule.rst

    encoding
    fastx

"""

from genstore.seqio.encoding import (
    Base,
    decode,
    encode,
    pack,
    packed_size,
    revcomp,
    revcomp_codes,
    unpack,
)
from genstore.seqio.fastx import (
    Read,
    ReadSet,
    ReferenceGenome,
    iter_lines,
    kmer_mask,
    open_stream,
    parse_fasta,
    parse_fastq,
    write_fasta,
    write_fastq,
)

__ALL__ = [
    "Base",
    "decode",
    "encode",
    "pack",
    "packed_size",
    "revcomp",
    "revcomp_codes",
    "unpack",
    "Read",
    "ReadSet",
    "ReferenceGenome",
    "iter_lines",
    "kmer_mask",
    "open_stream",
    "parse_fasta",
    "parse_fastq",
    "write_fasta",
    "write_fastq",
]
