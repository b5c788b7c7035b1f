"""negforge: build developmental-negation diagnostic corpora from parsed
NLI pairs.

The public surface: dependency trees (`deptree`), category rules (`rules`),
WordNet synonym lookup (`wordnet`), synonym augmentation (`augment`),
corpus construction and splitting (`corpus`), and the `negforge` CLI.
"""

__version__ = "0.1.0"
