"""Speech-emotion recognition pipeline for isolated Indonesian words.

Subpackages: ``corpus`` (manifests, WAV I/O, DES validation, synthetic
corpora), ``dsp`` (endpointing, Daubechies DWT, features), ``stats``
(special functions, ANOVA, mixed models, likelihood-ratio tests) and ``ml``
(SMO-trained SVM, sigmoid neuron, stratified cross-validation).
"""
__version__ = "0.1.0"
