from django.urls import path

from construct import views

app_name = 'construct'

urlpatterns = [
    path('profiles/', views.ConstructProfileView.as_view(),
         name='profiles'),
    path('critical-sets/', views.CriticalSetsView.as_view(),
         name='critical-sets'),
]
